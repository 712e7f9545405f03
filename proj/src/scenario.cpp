#include "vilab/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace vilab {

bool Report::pass() const {
    for (const auto& q : queries)
        if (!q.pass) return false;
    return true;
}

bool Report::indeterminate() const {
    for (const auto& q : queries)
        if (q.indeterminate) return true;
    return false;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["scenario"] = scenario;
    j["ring"] = ring;
    j["group"] = group;
    j["queries"] = nlohmann::json::array();
    for (const auto& q : queries) {
        nlohmann::json qj;
        qj["query"] = q.query;
        qj["verdict"] = q.verdict;
        qj["expected"] = q.expected;
        qj["source"] = q.source;
        qj["pass"] = q.pass;
        if (q.indeterminate) qj["indeterminate"] = true;
        qj["certificate"] = q.certificate;
        j["queries"].push_back(qj);
    }
    j["summary"] = {{"pass", pass()}, {"checked", queries.size()}, {"indeterminate", indeterminate()}};
    return j;
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "scenario " << scenario << " (ring " << ring << ")\n";
    for (const auto& q : queries) {
        out << "  [" << (q.pass ? "PASS" : (q.indeterminate ? "INDET" : "FAIL")) << "] " << q.query
            << ": " << q.verdict << " (expected " << q.expected << ", " << q.source << ", "
            << q.elapsed_ms << " ms)\n";
    }
    out << (pass() ? "PASS" : (indeterminate() ? "INDETERMINATE" : "FAIL")) << "\n";
    return out.str();
}

namespace {

class QueryTimer {
public:
    QueryTimer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto end = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(end - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

QueryRecord& add_query(Report& rep, const std::string& name, const std::string& expected,
                       const std::string& source) {
    QueryRecord q;
    q.query = name;
    q.expected = expected;
    q.source = source;
    rep.queries.push_back(std::move(q));
    return rep.queries.back();
}

void finish(QueryRecord& q, const std::string& verdict, nlohmann::json certificate,
            const QueryTimer& timer, bool indeterminate = false) {
    q.verdict = verdict;
    q.certificate = std::move(certificate);
    q.indeterminate = indeterminate;
    q.pass = !indeterminate && verdict == q.expected;
    q.elapsed_ms = timer.ms();
}

// the torus scenario data: H = diagonal with rows weighted (-1, 2p); its
// square-ring invariants are generated by x(1,1)^i x(1,2)^j x(2,h), i+j = 2p
GroupSpec torus_group(std::uint32_t p) {
    DiagonalSpec d;
    d.freeWeights = {{-1}, {2LL * p}};
    GroupSpec spec;
    spec.v = std::move(d);
    return spec;
}

std::vector<Monomial> torus_expected_generators(std::uint32_t p) {
    std::vector<Monomial> out;
    for (std::uint32_t h = 1; h <= 2; ++h)
        for (std::uint32_t i = 0; i <= 2 * p; ++i) {
            std::uint32_t j = 2 * p - i;
            Monomial m = Monomial::var(VarId::x(1, 1), i) * Monomial::var(VarId::x(1, 2), j) *
                         Monomial::var(VarId::x(2, h), 1);
            out.push_back(m);
        }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.less_than(b); });
    return out;
}

Poly torus_counterexample(const RingCtx& ctx) {
    Poly f = Poly::constant(1, ctx.p);
    for (int j = 1; j <= ctx.d; ++j) f = f * Poly::variable(VarId::x(1, j), ctx.p);
    return f * Poly::variable(VarId::x(2, ctx.d), ctx.p);
}

nlohmann::json monomial_list_json(const std::vector<Monomial>& ms) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& m : ms) j.push_back(m.str());
    return j;
}

GroupSpec scalar_mu3(int n) {
    DiagonalSpec d;
    DiagonalSpec::Torsion t;
    t.modulus = 3;
    t.weights.assign(n, 1);
    d.torsion.push_back(std::move(t));
    GroupSpec spec;
    spec.v = std::move(d);
    return spec;
}

void run_membership_query(Report& rep, const std::string& name, const std::string& expected,
                          const std::string& source, PolarizedAlgebra& alg, const Poly& f) {
    auto& q = add_query(rep, name, expected, source);
    QueryTimer t;
    MembershipCertificate cert = alg.member(f);
    std::string verdict =
        cert.verdict == MembershipCertificate::Verdict::member
            ? "member"
            : (cert.verdict == MembershipCertificate::Verdict::nonmember ? "nonmember" : "indeterminate");
    finish(q, verdict, cert.to_json(), t,
           cert.verdict == MembershipCertificate::Verdict::indeterminate);
}

Report torus_report(std::uint32_t p, int max_deg, const Caps& caps) {
    RingCtx ctx(2, 2 * static_cast<int>(p), p);
    GroupSpec H = torus_group(p);
    Report rep;
    rep.scenario = p == 2 ? "torus-p2" : "torus-p" + std::to_string(p);
    rep.ring = ctx.str();
    rep.group = H.to_json();

    RingCtx square(2, 2, p);
    std::vector<Monomial> gens_monomials;
    {
        auto& q = add_query(rep, "minimal-generators-2x2-deg" + std::to_string(max_deg),
                            "exact generator family", p == 2 ? "reference" : "computed");
        QueryTimer t;
        gens_monomials = minimal_monomial_generators(H, square, max_deg);
        bool match = gens_monomials == torus_expected_generators(p);
        finish(q, match ? "exact generator family" : "unexpected generator list",
               monomial_list_json(gens_monomials), t);
    }

    std::vector<Poly> gens;
    for (const auto& m : gens_monomials) gens.push_back(Poly::term(m, Scalar::one(p)));
    Poly F = torus_counterexample(ctx);

    {
        auto& q = add_query(rep, "invariance-of-F", "invariant", p == 2 ? "reference" : "computed");
        QueryTimer t;
        auto inv = is_invariant(F, H, ctx);
        finish(q, inv.invariant ? "invariant" : "not invariant: " + inv.witness,
               {{"polynomial", F.str()}}, t);
    }

    PolarizedAlgebra alg(gens, ctx, caps);
    run_membership_query(rep, "membership-of-F", "nonmember", p == 2 ? "reference" : "computed", alg,
                         F);

    if (p == 2) {
        auto& q = add_query(rep, "p-root-level-of-F", "level 1", "computed");
        QueryTimer t;
        auto res = alg.p_root_level(F, caps.mMax);
        if (res.level) {
            nlohmann::json cert;
            cert["level"] = *res.level;
            cert["power"] = res.power;
            cert["dependence"] = "X^" + std::to_string(res.power) + " - r";
            cert["membership"] = res.certificate.to_json();
            bool expands = res.certificate.expand(p) == poly_pow(F, res.power);
            finish(q, expands ? "level " + std::to_string(*res.level) : "certificate mismatch", cert,
                   t);
        } else {
            bool indet = res.certificate.verdict == MembershipCertificate::Verdict::indeterminate;
            finish(q, indet ? "indeterminate" : "not found", res.certificate.to_json(), t, indet);
        }
    }
    return rep;
}

Report mu3_n2_report(const Caps& caps) {
    RingCtx ctx(2, 3, 2);
    GroupSpec H = scalar_mu3(2);
    Report rep;
    rep.scenario = "mu3-char2-n2";
    rep.ring = ctx.str();
    rep.group = H.to_json();

    RingCtx square(2, 2, 2);
    std::vector<Monomial> gens_monomials;
    {
        auto& q = add_query(rep, "minimal-generators-2x2-deg3", "all 20 cubic monomials", "reference");
        QueryTimer t;
        gens_monomials = minimal_monomial_generators(H, square, 3);
        bool all_cubic = gens_monomials.size() == 20;
        for (const auto& m : gens_monomials) all_cubic = all_cubic && m.total_degree() == 3;
        finish(q, all_cubic ? "all 20 cubic monomials" : "unexpected generator list",
               monomial_list_json(gens_monomials), t);
    }

    std::vector<Poly> gens;
    for (const auto& m : gens_monomials) gens.push_back(Poly::term(m, Scalar::one(2)));
    Poly f = Poly::variable(VarId::x(1, 1), 2) * Poly::variable(VarId::x(1, 2), 2) *
             Poly::variable(VarId::x(1, 3), 2);

    {
        auto& q = add_query(rep, "invariance-of-x11x12x13", "invariant", "trivial degree count");
        QueryTimer t;
        auto inv = is_invariant(f, H, ctx);
        finish(q, inv.invariant ? "invariant" : "not invariant", {{"polynomial", f.str()}}, t);
    }

    PolarizedAlgebra alg(gens, ctx, caps);
    run_membership_query(rep, "membership-of-x11x12x13", "nonmember", "reference", alg, f);

    {
        auto& q = add_query(rep, "p-root-level-of-x11x12x13", "level 1", "computed");
        QueryTimer t;
        auto res = alg.p_root_level(f, caps.mMax);
        if (res.level) {
            nlohmann::json cert;
            cert["level"] = *res.level;
            cert["power"] = res.power;
            cert["membership"] = res.certificate.to_json();
            bool expands = res.certificate.expand(2) == poly_pow(f, res.power);
            finish(q, expands ? "level " + std::to_string(*res.level) : "certificate mismatch", cert,
                   t);
        } else {
            bool indet = res.certificate.verdict == MembershipCertificate::Verdict::indeterminate;
            finish(q, indet ? "indeterminate" : "not found", res.certificate.to_json(), t, indet);
        }
    }
    return rep;
}

Report mu3_n3_report(const Caps& caps) {
    RingCtx ctx(3, 4, 2);
    GroupSpec H = scalar_mu3(3);
    Report rep;
    rep.scenario = "mu3-char2-n3";
    rep.ring = ctx.str();
    rep.group = H.to_json();

    RingCtx square(3, 3, 2);
    std::vector<Monomial> gens_monomials = minimal_monomial_generators(H, square, 3);
    {
        auto& q = add_query(rep, "minimal-generators-3x3-deg3", "all 165 cubic monomials", "reference");
        QueryTimer t;
        bool all_cubic = gens_monomials.size() == 165;
        for (const auto& m : gens_monomials) all_cubic = all_cubic && m.total_degree() == 3;
        finish(q, all_cubic ? "all 165 cubic monomials" : "unexpected generator list",
               {{"count", gens_monomials.size()}}, t);
    }

    std::vector<Poly> gens;
    for (const auto& m : gens_monomials) gens.push_back(Poly::term(m, Scalar::one(2)));
    PolarizedAlgebra alg(gens, ctx, caps);

    std::vector<Monomial> invariants = invariant_monomials(H, ctx, 6);
    auto invariant_dim = [&](std::uint64_t deg) {
        std::size_t c = 0;
        for (const auto& m : invariants)
            if (m.total_degree() == deg) ++c;
        return c;
    };

    for (std::uint64_t deg : {std::uint64_t(3), std::uint64_t(6)}) {
        auto& q = add_query(rep, "graded-dimensions-degree-" + std::to_string(deg),
                            "dimensions agree", "reference equality, values computed");
        QueryTimer t;
        try {
            std::size_t inv_dim = invariant_dim(deg);
            std::size_t pol_dim = alg.component_dim(deg);
            nlohmann::json cert{{"invariantDim", inv_dim}, {"polarizedDim", pol_dim}};
            finish(q, inv_dim == pol_dim ? "dimensions agree" : "dimensions differ", cert, t);
        } catch (const CapExceeded& e) {
            finish(q, "indeterminate", {{"note", e.what()}}, t, true);
        }
    }
    return rep;
}

RootedKind rooted_kind_of(const std::string& name) {
    if (name == "classical-sl") return RootedKind::SL;
    if (name == "classical-so") return RootedKind::SOsplit;
    return RootedKind::Spsplit;
}

Report classical_report(const std::string& name, const Caps& caps) {
    RootedKind kind = rooted_kind_of(name);
    std::uint32_t p = 5;
    RingCtx ctx(2, 3, p);
    GroupSpec H;
    H.v = RootedSpec{kind, 2};
    Report rep;
    rep.scenario = name;
    rep.ring = ctx.str();
    rep.group = H.to_json();

    std::vector<Poly> big_gens = classical_generators(kind, ctx);
    {
        auto& q = add_query(rep, "generator-invariance", "all invariant", "reference");
        QueryTimer t;
        bool all = true;
        std::string witness;
        for (const auto& g : big_gens) {
            auto inv = is_invariant(g, H, ctx);
            if (!inv.invariant) {
                all = false;
                witness = inv.witness;
                break;
            }
        }
        finish(q, all ? "all invariant" : "failure: " + witness, {{"count", big_gens.size()}}, t);
    }

    if (kind == RootedKind::SOsplit) {
        auto& q = add_query(rep, "generator-invariance-n3", "all invariant", "reference");
        QueryTimer t;
        RingCtx ctx3(3, 3, p);
        GroupSpec H3;
        H3.v = RootedSpec{kind, 3};
        bool all = true;
        for (const auto& g : classical_generators(kind, ctx3))
            all = all && is_invariant(g, H3, ctx3).invariant;
        finish(q, all ? "all invariant" : "failure", nlohmann::json::object(), t);
    }

    if (kind == RootedKind::SL) {
        auto& q = add_query(rep, "minor-expansion-identity", "holds", "reference");
        QueryTimer t;
        PolyMatrix g = generic_group_matrix(ctx.d, p);
        bool holds = true;
        std::vector<int> rows{1, 2};
        for (const auto& J : increasing_subsets(ctx.d, 2)) {
            Poly lhs = act_column(minor({rows, J}, ctx), g, ctx);
            Poly rhs(p);
            for (const auto& I : increasing_subsets(ctx.d, 2))
                rhs += minor({rows, I}, ctx) * minor_of(g, I, J);
            holds = holds && lhs == rhs;
        }
        finish(q, holds ? "holds" : "fails", nlohmann::json::object(), t);

        auto& q2 = add_query(rep, "hull-image-of-minors", "matches", "reference");
        QueryTimer t2;
        bool matches = true;
        Poly D = delta(ctx);
        for (const auto& J : increasing_subsets(ctx.d, 2)) {
            HullElement h = phi_prime(minor({rows, J}, ctx), ctx);
            Poly expected = D * minor_of(g, {1, 2}, J);
            matches = matches && h.expand(p) == expected && h.terms.size() == 1;
        }
        finish(q2, matches ? "matches" : "differs", nlohmann::json::object(), t2);

        auto& q3 = add_query(rep, "delta-power-of-minors", "all level 0", "reference");
        QueryTimer t3;
        PolarizedAlgebra alg({delta(RingCtx(2, 2, p))}, ctx, caps);
        bool all_zero = true;
        for (const auto& J : increasing_subsets(ctx.d, 2)) {
            auto res = alg.delta_power_level(minor({rows, J}, ctx), caps.eMax);
            all_zero = all_zero && res.exponent && *res.exponent == 0;
        }
        finish(q3, all_zero ? "all level 0" : "nonzero level", nlohmann::json::object(), t3);
    }

    if (kind == RootedKind::SOsplit || kind == RootedKind::Spsplit) {
        auto& q = add_query(rep, "pairing-action-identity", "holds", "reference");
        QueryTimer t;
        PolyMatrix g = generic_group_matrix(ctx.d, p);
        bool holds = true;
        for (int i = 1; i <= ctx.d && holds; ++i)
            for (int j = 1; j <= ctx.d && holds; ++j) {
                Poly lhs = act_column(split_pairing(kind, i, j, ctx), g, ctx);
                Poly rhs(p);
                for (int s = 1; s <= ctx.d; ++s)
                    for (int tt = 1; tt <= ctx.d; ++tt)
                        rhs += split_pairing(kind, s, tt, ctx) * g[s - 1][i - 1] * g[tt - 1][j - 1];
                holds = lhs == rhs;
            }
        finish(q, holds ? "holds" : "fails", nlohmann::json::object(), t);
    }

    if (kind == RootedKind::SOsplit) {
        auto& q = add_query(rep, "hull-image-of-pairings", "matches", "reference");
        QueryTimer t;
        bool matches = true;
        Poly D1 = gram_determinant(kind, 1, ctx);
        for (int i = 1; i <= ctx.d && matches; ++i)
            for (int j = i; j <= ctx.d && matches; ++j) {
                HullElement h = phi_prime(split_pairing(kind, i, j, ctx), ctx);
                Poly expected = D1 * Poly::variable(VarId::g(1, i), p) * Poly::variable(VarId::g(1, j), p);
                matches = h.expand(p) == expected;
            }
        finish(q, matches ? "matches" : "differs", nlohmann::json::object(), t);
    }

    {
        auto& q = add_query(rep, "hull-coverage", "covered", "reference");
        QueryTimer t;
        auto pairs = coverage_pairs(H, ctx);
        auto gens_square = default_generators(H, ctx);
        auto records = check_hull_coverage(pairs, gens_square, ctx, caps);
        bool covered = true, indet = false;
        nlohmann::json recj = nlohmann::json::array();
        for (const auto& r : records) {
            covered = covered && r.covered;
            indet = indet || r.indeterminate;
            recj.push_back(r.to_json());
        }
        nlohmann::json cert;
        cert["records"] = recj;
        if (covered && !indet) {
            cert["goodFiltrationCriterion"] = "satisfied";
            cert["conclusion"] = "polarized algebra equals the full invariant algebra";
        }
        finish(q, indet ? "indeterminate" : (covered ? "covered" : "not covered"), cert, t, indet);
    }
    return rep;
}

Report block_unipotent_report(const Caps& caps) {
    RingCtx ctx(3, 4, 2);
    BlockUnipotentSpec spec;
    spec.blocks = {2, 1};
    GroupSpec H;
    H.v = spec;
    Report rep;
    rep.scenario = "block-unipotent";
    rep.ring = ctx.str();
    rep.group = H.to_json();

    auto row_sets = invariant_row_sets(spec);
    {
        auto& q = add_query(rep, "invariant-minors", "all invariant", "reference");
        QueryTimer t;
        bool all = true;
        std::size_t count = 0;
        for (const auto& I : row_sets)
            for (const auto& J : increasing_subsets(ctx.d, static_cast<int>(I.size()))) {
                ++count;
                all = all && is_invariant(minor({I, J}, ctx), H, ctx).invariant;
            }
        finish(q, all ? "all invariant" : "failure", {{"count", count}}, t);
    }

    {
        auto& q = add_query(rep, "non-invariant-witness", "not invariant", "reference");
        QueryTimer t;
        auto inv = is_invariant(minor({{1, 2}, {1, 2}}, ctx), H, ctx);
        finish(q, inv.invariant ? "invariant" : "not invariant", {{"witness", inv.witness}}, t);
    }

    {
        auto& q = add_query(rep, "membership-of-invariant-minors", "all member", "reference");
        QueryTimer t;
        PolarizedAlgebra alg(default_generators(H, ctx), ctx, caps);
        bool all = true;
        bool indet = false;
        std::size_t count = 0;
        for (const auto& I : row_sets)
            for (const auto& J : increasing_subsets(ctx.d, static_cast<int>(I.size()))) {
                ++count;
                auto cert = alg.member(minor({I, J}, ctx));
                if (cert.verdict == MembershipCertificate::Verdict::indeterminate) indet = true;
                all = all && cert.is_member();
            }
        finish(q, indet ? "indeterminate" : (all ? "all member" : "nonmember found"),
               {{"count", count}}, t, indet);
    }
    return rep;
}

}  // namespace

std::vector<Poly> default_generators(const GroupSpec& H, const RingCtx& ctx, int sieve_max_deg) {
    RingCtx square(ctx.n, ctx.n, ctx.p);
    if (H.is_diagonal()) {
        std::vector<Poly> gens;
        for (const auto& m : minimal_monomial_generators(H, square, sieve_max_deg))
            gens.push_back(Poly::term(m, Scalar::one(ctx.p)));
        return gens;
    }
    if (H.is_rooted()) return classical_generators(H.rooted().kind, square);
    if (H.is_block_unipotent()) {
        std::vector<Poly> gens;
        for (const auto& I : invariant_row_sets(H.block_unipotent()))
            for (const auto& J : increasing_subsets(square.d, static_cast<int>(I.size())))
                gens.push_back(minor({I, J}, square));
        return gens;
    }
    throw InputError("no canned generator source for this group variant");
}

std::vector<CoveragePair> coverage_pairs(const GroupSpec& H, const RingCtx& ctx) {
    std::vector<CoveragePair> pairs;
    auto omega_r = [&](int r, long long scale) {
        std::vector<long long> e(ctx.d, 0);
        for (int i = 0; i < r; ++i) e[i] = scale;
        return GLWeight(e);
    };
    if (H.is_rooted()) {
        RootedKind kind = H.rooted().kind;
        if (kind == RootedKind::SL) {
            CoveragePair pr;
            pr.a = delta(ctx);
            pr.omega = omega_r(ctx.n, 1);
            pr.label = "leading minor";
            pairs.push_back(std::move(pr));
            return pairs;
        }
        if (kind == RootedKind::SOsplit) {
            CoveragePair pr;
            pr.a = delta(ctx);
            pr.omega = omega_r(ctx.n, 1);
            pr.label = "leading minor";
            pairs.push_back(std::move(pr));
            for (int r = 1; r < ctx.n; ++r) {
                CoveragePair dr;
                dr.a = gram_determinant(kind, r, ctx);
                dr.omega = omega_r(r, 2);
                dr.label = "gram determinant D" + std::to_string(r);
                pairs.push_back(std::move(dr));
            }
            return pairs;
        }
        if (kind == RootedKind::Spsplit) {
            for (int s = 2; s <= ctx.n; s += 2) {
                CoveragePair pr;
                pr.a = gram_pfaffian(s, ctx);
                pr.omega = omega_r(s, 1);
                pr.label = "gram pfaffian Pf" + std::to_string(s);
                pairs.push_back(std::move(pr));
            }
            return pairs;
        }
        throw InputError("no coverage pairs for this rooted kind");
    }
    if (H.is_block_unipotent()) {
        for (const auto& I : invariant_row_sets(H.block_unipotent())) {
            int r = static_cast<int>(I.size());
            std::vector<int> cols;
            for (int c = 1; c <= r; ++c) cols.push_back(c);
            CoveragePair pr;
            pr.a = minor({I, cols}, ctx);
            pr.omega = omega_r(r, 1);
            pr.label = MinorSpec{I, cols}.str();
            pairs.push_back(std::move(pr));
        }
        return pairs;
    }
    throw InputError("coverage pairs are defined for rooted and block unipotent groups");
}

std::vector<std::string> scenario_names() {
    return {"torus-p2",     "torus-p3",     "mu3-char2-n2", "mu3-char2-n3",
            "classical-sl", "classical-so", "classical-sp", "block-unipotent"};
}

Report run_scenario(const std::string& name, const Caps& caps) {
    if (name == "torus-p2") return torus_report(2, 8, caps);
    if (name == "torus-p3") return torus_report(3, 7, caps);
    if (name == "mu3-char2-n2") return mu3_n2_report(caps);
    if (name == "mu3-char2-n3") return mu3_n3_report(caps);
    if (name == "classical-sl" || name == "classical-so" || name == "classical-sp")
        return classical_report(name, caps);
    if (name == "block-unipotent") return block_unipotent_report(caps);
    throw InputError("unknown scenario '" + name + "'; known: torus-p2 torus-p3 mu3-char2-n2 "
                     "mu3-char2-n3 classical-sl classical-so classical-sp block-unipotent");
}

}  // namespace vilab
