// vilab: exact workbench for vector invariants of matrix groups.
// Exit codes: 0 pass, 1 fail, 2 indeterminate (a cap was hit), 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vilab/scenario.hpp"

using namespace vilab;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GroupSpec load_group(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError("group file '" + path + "': " + e.what());
    }
    return GroupSpec::from_json(j);
}

std::vector<Poly> load_polys(const std::string& path, std::uint32_t p) {
    std::istringstream in(read_file(path));
    std::vector<Poly> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(parse_poly(line, p));
    }
    if (out.empty()) throw InputError("no polynomials in '" + path + "'");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write '" + out_path + "'");
        out << text;
    }
}

struct CommonOpts {
    std::string ring;
    std::string group_path;
    std::string poly_path;
    std::string gens_path;
    std::string emit_mode = "text";
    std::string out_path;
    int gen_max_deg = 8;
    Caps caps;
};

std::vector<Poly> resolve_generators(const CommonOpts& opt, const GroupSpec& H, const RingCtx& ctx) {
    if (!opt.gens_path.empty()) {
        auto gens = load_polys(opt.gens_path, ctx.p);
        RingCtx square(ctx.n, ctx.n, ctx.p);
        for (const auto& g : gens) check_in_ring(g, square);
        return gens;
    }
    return default_generators(H, ctx, opt.gen_max_deg);
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool needs_ring = true, bool needs_group = false,
                bool needs_poly = false) {
    if (needs_ring) cmd->add_option("--ring", opt.ring, "ring spec NxD@pP")->required();
    auto* g = cmd->add_option("--group", opt.group_path, "group spec JSON file");
    if (needs_group) g->required();
    auto* f = cmd->add_option("--poly", opt.poly_path, "polynomial text file");
    if (needs_poly) f->required();
    cmd->add_option("--gens", opt.gens_path, "square-ring generators, one polynomial per line");
    cmd->add_option("--emit", opt.emit_mode, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
    cmd->add_option("--gen-max-deg", opt.gen_max_deg, "sieve depth for diagonal generator sources");
    cmd->add_option("--max-products", opt.caps.maxProducts, "product enumeration cap");
    cmd->add_option("--max-spanned-terms", opt.caps.maxSpannedTerms, "stored span term cap");
}

int verdict_exit(const MembershipCertificate& cert) {
    return cert.verdict == MembershipCertificate::Verdict::indeterminate ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for vector invariants of matrix groups"};
    app.require_subcommand(1);

    CommonOpts opt;
    int max_deg = 8;
    bool minimal = false;
    std::string weight_arg;
    std::string scenario_name;
    int m_max = 4, e_max = 6;

    auto* invariants = app.add_subcommand("invariants", "invariant/generator monomials of a diagonal group");
    add_common(invariants, opt, true, true);
    invariants->add_option("--max-deg", max_deg, "degree bound")->required();
    invariants->add_flag("--minimal", minimal, "emit minimal generators instead of all invariants");

    auto* member = app.add_subcommand("member", "graded membership in the polarized algebra");
    add_common(member, opt, true, false, true);

    auto* proot = app.add_subcommand("proot", "smallest m with f^(p^m) in the polarized algebra");
    add_common(proot, opt, true, false, true);
    proot->add_option("--m-max", m_max, "search bound");

    auto* deltapow = app.add_subcommand("deltapow", "smallest e with Delta^e * f in the polarized algebra");
    add_common(deltapow, opt, true, false, true);
    deltapow->add_option("--e-max", e_max, "search bound");

    auto* span = app.add_subcommand("span", "column-group orbit span of a homogeneous polynomial");
    add_common(span, opt, true, false, true);

    auto* hweight = app.add_subcommand("hweight", "h-value of a torus weight");
    hweight->add_option("--weight", weight_arg, "comma-separated weight entries")->required();
    hweight->add_option("--emit", opt.emit_mode, "output format")->check(CLI::IsMember({"text", "json"}));
    hweight->add_option("--out", opt.out_path, "output file");

    auto* phiprime = app.add_subcommand("phiprime", "hull image of a homogeneous polynomial");
    add_common(phiprime, opt, true, false, true);

    auto* coverage = app.add_subcommand("coverage", "hull coverage probe for the group's U-generators");
    add_common(coverage, opt, true, true);
    coverage->add_option("--degree-cap", opt.caps.coverageDegreeCap, "largest generator degree probed");

    auto* scenario = app.add_subcommand("scenario", "run a bundled scenario");
    scenario->add_option("name", scenario_name, "scenario name")->required();
    scenario->add_option("--emit", opt.emit_mode, "output format")->check(CLI::IsMember({"text", "json"}));
    scenario->add_option("--out", opt.out_path, "output file");
    scenario->add_option("--max-products", opt.caps.maxProducts, "product enumeration cap");
    scenario->add_option("--max-spanned-terms", opt.caps.maxSpannedTerms, "stored span term cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (invariants->parsed()) {
            RingCtx ctx = RingCtx::parse(opt.ring);
            GroupSpec H = load_group(opt.group_path);
            auto ms = minimal ? minimal_monomial_generators(H, ctx, max_deg)
                              : invariant_monomials(H, ctx, max_deg);
            if (opt.emit_mode == "json") {
                nlohmann::json j;
                j["ring"] = ctx.str();
                j["maxDeg"] = max_deg;
                j["kind"] = minimal ? "minimal-generators" : "invariant-monomials";
                j["monomials"] = nlohmann::json::array();
                for (const auto& m : ms) j["monomials"].push_back(m.str());
                emit(j.dump(2), opt.out_path);
            } else {
                std::string text;
                for (const auto& m : ms) text += m.str() + "\n";
                text += "count: " + std::to_string(ms.size()) + "\n";
                emit(text, opt.out_path);
            }
            return 0;
        }

        if (member->parsed() || proot->parsed() || deltapow->parsed()) {
            RingCtx ctx = RingCtx::parse(opt.ring);
            Poly f = parse_poly(read_file(opt.poly_path), ctx.p);
            check_in_ring(f, ctx);
            std::vector<Poly> gens;
            if (!opt.group_path.empty()) {
                GroupSpec H = load_group(opt.group_path);
                auto inv = is_invariant(f, H, ctx);
                if (!inv.invariant)
                    throw InputError("polynomial is not invariant under the group: " + inv.witness);
                gens = resolve_generators(opt, H, ctx);
            } else if (!opt.gens_path.empty()) {
                gens = load_polys(opt.gens_path, ctx.p);
            } else {
                throw InputError("need --group or --gens to define the polarized algebra");
            }
            PolarizedAlgebra alg(gens, ctx, opt.caps);

            if (member->parsed()) {
                auto cert = alg.member(f);
                if (opt.emit_mode == "json")
                    emit(cert.to_json().dump(2), opt.out_path);
                else
                    emit("verdict: " + cert.to_json()["verdict"].get<std::string>(), opt.out_path);
                return verdict_exit(cert);
            }
            if (proot->parsed()) {
                auto res = alg.p_root_level(f, m_max);
                nlohmann::json j;
                if (res.level) {
                    j["level"] = *res.level;
                    j["power"] = res.power;
                    j["dependence"] = "X^" + std::to_string(res.power) + " - r";
                }
                j["membership"] = res.certificate.to_json();
                j["searchedUpTo"] = res.searched_up_to;
                emit(opt.emit_mode == "json"
                         ? j.dump(2)
                         : (res.level ? "level: " + std::to_string(*res.level)
                                      : std::string("not found up to m-max")),
                     opt.out_path);
                if (res.certificate.verdict == MembershipCertificate::Verdict::indeterminate) return 2;
                return res.level ? 0 : 1;
            }
            auto res = alg.delta_power_level(f, e_max);
            nlohmann::json j;
            if (res.exponent) j["exponent"] = *res.exponent;
            j["membership"] = res.certificate.to_json();
            j["searchedUpTo"] = res.searched_up_to;
            emit(opt.emit_mode == "json"
                     ? j.dump(2)
                     : (res.exponent ? "exponent: " + std::to_string(*res.exponent)
                                     : std::string("not found up to e-max")),
                 opt.out_path);
            if (res.certificate.verdict == MembershipCertificate::Verdict::indeterminate) return 2;
            return res.exponent ? 0 : 1;
        }

        if (span->parsed()) {
            RingCtx ctx = RingCtx::parse(opt.ring);
            Poly f = parse_poly(read_file(opt.poly_path), ctx.p);
            check_in_ring(f, ctx);
            ModuleSpan ms = module_span(f, ctx);
            if (opt.emit_mode == "json") {
                nlohmann::json j;
                j["seed"] = ms.seed.str();
                j["degree"] = ms.degree;
                j["dimension"] = ms.basis.dim();
                j["basis"] = nlohmann::json::array();
                for (const auto& e : ms.elements) j["basis"].push_back(e.str());
                emit(j.dump(2), opt.out_path);
            } else {
                std::string text = "dimension: " + std::to_string(ms.basis.dim()) + "\n";
                for (const auto& e : ms.elements) text += e.str() + "\n";
                emit(text, opt.out_path);
            }
            return 0;
        }

        if (hweight->parsed()) {
            std::vector<long long> e;
            std::istringstream in(weight_arg);
            std::string tok;
            while (std::getline(in, tok, ',')) e.push_back(std::stoll(tok));
            if (e.empty()) throw InputError("empty weight");
            long long h = h_value(GLWeight(e));
            if (opt.emit_mode == "json")
                emit(nlohmann::json{{"weight", e}, {"h", h}}.dump(2), opt.out_path);
            else
                emit("h = " + std::to_string(h), opt.out_path);
            return 0;
        }

        if (phiprime->parsed()) {
            RingCtx ctx = RingCtx::parse(opt.ring);
            Poly f = parse_poly(read_file(opt.poly_path), ctx.p);
            check_in_ring(f, ctx);
            HullElement h = phi_prime(f, ctx);
            if (opt.emit_mode == "json") {
                emit(h.to_json().dump(2), opt.out_path);
            } else {
                std::string text = "level: " + std::to_string(h.level) + "\n";
                for (const auto& t : h.terms)
                    text += "(" + t.u.str() + ") (x) (" + t.g.str() + ")  weight " + t.omega.str() + "\n";
                emit(text, opt.out_path);
            }
            return 0;
        }

        if (coverage->parsed()) {
            RingCtx ctx = RingCtx::parse(opt.ring);
            GroupSpec H = load_group(opt.group_path);
            auto pairs = coverage_pairs(H, ctx);
            auto gens = resolve_generators(opt, H, ctx);
            auto records = check_hull_coverage(pairs, gens, ctx, opt.caps);
            bool covered = true, indet = false;
            nlohmann::json j;
            j["records"] = nlohmann::json::array();
            for (const auto& r : records) {
                covered = covered && r.covered;
                indet = indet || r.indeterminate;
                j["records"].push_back(r.to_json());
            }
            j["covered"] = covered && !indet;
            if (covered && !indet) {
                j["goodFiltrationCriterion"] = "satisfied";
                j["conclusion"] = "polarized algebra equals the full invariant algebra";
            }
            if (opt.emit_mode == "json") {
                emit(j.dump(2), opt.out_path);
            } else {
                std::string text;
                for (const auto& r : records)
                    text += std::string(r.indeterminate ? "INDET " : (r.covered ? "covered " : "uncovered ")) +
                            r.pair + " at weight " + GLWeight(r.weight).str() + "\n";
                emit(text, opt.out_path);
            }
            return indet ? 2 : (covered ? 0 : 1);
        }

        if (scenario->parsed()) {
            Report rep = run_scenario(scenario_name, opt.caps);
            emit(opt.emit_mode == "json" ? rep.to_json().dump(2) : rep.to_text(), opt.out_path);
            return rep.pass() ? 0 : (rep.indeterminate() ? 2 : 1);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "indeterminate: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
