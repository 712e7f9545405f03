#include "vilab/groups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_set>

namespace vilab {

int DiagonalSpec::rows() const {
    if (!freeWeights.empty()) return static_cast<int>(freeWeights.size());
    if (!torsion.empty()) return static_cast<int>(torsion.front().weights.size());
    return 0;
}

void DiagonalSpec::validate(int n) const {
    if (!freeWeights.empty()) {
        if (static_cast<int>(freeWeights.size()) != n)
            throw InputError("diagonal group: freeWeights must have n rows");
        std::size_t r = freeWeights.front().size();
        for (const auto& row : freeWeights)
            if (row.size() != r) throw InputError("diagonal group: ragged freeWeights");
    }
    for (const auto& t : torsion) {
        if (t.modulus < 2) throw InputError("diagonal group: torsion modulus must be >= 2");
        if (static_cast<int>(t.weights.size()) != n)
            throw InputError("diagonal group: torsion weight vector must have length n");
    }
}

ScalarMatrix GeneratedSpec::instantiate(std::size_t idx, std::uint32_t p) const {
    const auto& gen = generators.at(idx);
    std::size_t n = gen.size();
    ScalarMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) {
        if (gen[i].size() != n) throw InputError("generated group: generator is not square");
        for (std::size_t j = 0; j < n; ++j) {
            const BigRational& q = gen[i][j];
            if (p == 0) {
                m.at(i + 1, j + 1) = Scalar::rational(q);
            } else {
                Scalar den = Scalar::of(BigInt(denominator(q)), p);
                if (den.is_zero())
                    throw InputError("generated group: denominator vanishes mod " + std::to_string(p));
                m.at(i + 1, j + 1) = Scalar::of(BigInt(numerator(q)), p) * den.inverse();
            }
        }
    }
    return m;
}

void GeneratedSpec::validate(int n, std::uint32_t p) const {
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (static_cast<int>(generators[k].size()) != n)
            throw InputError("generated group: generator size differs from n");
        ScalarMatrix m = instantiate(k, p);
        if (m.det().is_zero()) throw InputError("generated group: generator is singular");
    }
}

int BlockUnipotentSpec::n() const {
    int total = 0;
    for (int b : blocks) {
        if (b < 1) throw InputError("block sizes must be positive");
        total += b;
    }
    return total;
}

int BlockUnipotentSpec::block_of(int row) const {
    int upper = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        upper += blocks[k];
        if (row <= upper) return static_cast<int>(k) + 1;
    }
    throw InputError("row outside block structure");
}

GroupSpec GroupSpec::from_json(const nlohmann::json& j) {
    std::string variant = j.at("variant").get<std::string>();
    GroupSpec spec;
    if (variant == "diagonal") {
        DiagonalSpec d;
        if (j.contains("freeWeights"))
            d.freeWeights = j.at("freeWeights").get<std::vector<std::vector<long long>>>();
        if (j.contains("torsion"))
            for (const auto& t : j.at("torsion")) {
                DiagonalSpec::Torsion tor;
                tor.modulus = t.at("modulus").get<long long>();
                tor.weights = t.at("weights").get<std::vector<long long>>();
                if (tor.modulus < 2) throw InputError("diagonal group: torsion modulus must be >= 2");
                d.torsion.push_back(std::move(tor));
            }
        spec.v = std::move(d);
    } else if (variant == "generated") {
        GeneratedSpec g;
        g.finite = j.value("finite", false);
        for (const auto& gen : j.at("generators")) {
            std::vector<std::vector<BigRational>> m;
            for (const auto& row : gen) {
                std::vector<BigRational> r;
                for (const auto& e : row) {
                    if (e.is_number_integer()) {
                        r.emplace_back(e.get<long long>());
                    } else if (e.is_string()) {
                        std::string s = e.get<std::string>();
                        std::size_t slash = s.find('/');
                        if (slash == std::string::npos)
                            r.emplace_back(BigInt(s));
                        else
                            r.emplace_back(BigRational(BigInt(s.substr(0, slash)),
                                                       BigInt(s.substr(slash + 1))));
                    } else {
                        throw InputError("generated group: entries must be integers or 'a/b' strings");
                    }
                }
                m.push_back(std::move(r));
            }
            g.generators.push_back(std::move(m));
        }
        spec.v = std::move(g);
    } else if (variant == "rooted") {
        RootedSpec r;
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "GL") r.kind = RootedKind::GL;
        else if (kind == "SL") r.kind = RootedKind::SL;
        else if (kind == "SOsplit") r.kind = RootedKind::SOsplit;
        else if (kind == "Spsplit") r.kind = RootedKind::Spsplit;
        else throw InputError("rooted group: unknown kind '" + kind + "'");
        r.n = j.at("n").get<int>();
        if (r.n < 1) throw InputError("rooted group: n must be positive");
        if (r.kind == RootedKind::Spsplit && r.n % 2 != 0)
            throw InputError("rooted group: Spsplit needs even n");
        spec.v = r;
    } else if (variant == "blockUnipotent") {
        BlockUnipotentSpec b;
        b.blocks = j.at("blocks").get<std::vector<int>>();
        b.n();  // validates positivity
        spec.v = std::move(b);
    } else {
        throw InputError("unknown group variant '" + variant + "'");
    }
    return spec;
}

nlohmann::json GroupSpec::to_json() const {
    nlohmann::json j;
    if (is_diagonal()) {
        const auto& d = diagonal();
        j["variant"] = "diagonal";
        j["freeWeights"] = d.freeWeights;
        j["torsion"] = nlohmann::json::array();
        for (const auto& t : d.torsion) j["torsion"].push_back({{"modulus", t.modulus}, {"weights", t.weights}});
    } else if (std::holds_alternative<GeneratedSpec>(v)) {
        const auto& g = std::get<GeneratedSpec>(v);
        j["variant"] = "generated";
        j["finite"] = g.finite;
        j["generators"] = nlohmann::json::array();
        for (const auto& gen : g.generators) {
            nlohmann::json m = nlohmann::json::array();
            for (const auto& row : gen) {
                nlohmann::json r = nlohmann::json::array();
                for (const auto& e : row) {
                    if (denominator(e) == 1)
                        r.push_back(numerator(e).str());
                    else
                        r.push_back(numerator(e).str() + "/" + denominator(e).str());
                }
                m.push_back(r);
            }
            j["generators"].push_back(m);
        }
    } else if (is_rooted()) {
        const auto& r = rooted();
        j["variant"] = "rooted";
        switch (r.kind) {
            case RootedKind::GL: j["kind"] = "GL"; break;
            case RootedKind::SL: j["kind"] = "SL"; break;
            case RootedKind::SOsplit: j["kind"] = "SOsplit"; break;
            case RootedKind::Spsplit: j["kind"] = "Spsplit"; break;
        }
        j["n"] = r.n;
    } else {
        j["variant"] = "blockUnipotent";
        j["blocks"] = block_unipotent().blocks;
    }
    return j;
}

namespace {

std::vector<std::uint64_t> row_degrees(const Monomial& m, int n) {
    std::vector<std::uint64_t> deg(n, 0);
    for (const auto& [k, e] : m.factors()) {
        VarId v = VarId::from_key(k);
        if (v.family != Family::X) throw InputError("invariance test expects matrix variables only");
        if (static_cast<int>(v.i) > n) throw InputError("variable row outside the group dimension");
        deg[v.i - 1] += e;
    }
    return deg;
}

bool diagonal_weight_vanishes(const DiagonalSpec& d, const std::vector<std::uint64_t>& rowdeg) {
    if (!d.freeWeights.empty()) {
        std::size_t r = d.freeWeights.front().size();
        for (std::size_t c = 0; c < r; ++c) {
            long long total = 0;
            for (std::size_t i = 0; i < rowdeg.size(); ++i)
                total += static_cast<long long>(rowdeg[i]) * d.freeWeights[i][c];
            if (total != 0) return false;
        }
    }
    for (const auto& t : d.torsion) {
        long long total = 0;
        for (std::size_t i = 0; i < rowdeg.size(); ++i)
            total += static_cast<long long>(rowdeg[i]) * t.weights[i];
        long long m = t.modulus;
        if (((total % m) + m) % m != 0) return false;
    }
    return true;
}

}  // namespace

bool torus_invariant_rowdegrees(RootedKind kind, int n, const std::vector<std::uint64_t>& rowdeg) {
    switch (kind) {
        case RootedKind::GL:
            for (auto d : rowdeg)
                if (d != 0) return false;
            return true;
        case RootedKind::SL:
            for (auto d : rowdeg)
                if (d != rowdeg[0]) return false;
            return true;
        case RootedKind::SOsplit:
        case RootedKind::Spsplit:
            for (int i = 1; i <= n / 2; ++i)
                if (rowdeg[i - 1] != rowdeg[n - i]) return false;
            return true;
    }
    return false;
}

namespace {

// integer matrix helpers for root vectors
using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix zero_int(int n) { return IntMatrix(n, std::vector<long long>(n, 0)); }

IntMatrix mul_int(const IntMatrix& a, const IntMatrix& b) {
    int n = static_cast<int>(a.size());
    IntMatrix c = zero_int(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

bool is_zero_int(const IntMatrix& a) {
    for (const auto& row : a)
        for (long long v : row)
            if (v != 0) return false;
    return true;
}

// exp(t F) = I + t F + (t^2/2) F^2, valid when F^3 = 0 and char != 2
PolyMatrix one_parameter_subgroup(const IntMatrix& f, std::uint32_t p) {
    int n = static_cast<int>(f.size());
    IntMatrix f2 = mul_int(f, f);
    if (!is_zero_int(mul_int(f2, f)))
        throw InputError("internal: root vector is not 3-step nilpotent");
    Poly t = Poly::variable(VarId::t(1), p);
    Poly t2 = t * t;
    Scalar half = Scalar::zero(p);
    if (!is_zero_int(f2)) {
        if (p == 2) throw InputError("root subgroup needs characteristic != 2");
        half = Scalar::of(2, p).inverse();
    }
    PolyMatrix m(n, std::vector<Poly>(n, Poly::zero(p)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly entry(p);
            if (i == j) entry += Poly::constant(1, p);
            if (f[i][j] != 0) entry += t * Poly::constant(f[i][j], p);
            if (f2[i][j] != 0) entry += t2 * Poly::constant(Scalar::of(f2[i][j], p) * half);
            m[i][j] = entry;
        }
    return m;
}

long long split_sign(RootedKind kind, int i, int n) {
    if (kind == RootedKind::Spsplit) return i <= n / 2 ? 1 : -1;
    return 1;
}

}  // namespace

std::vector<PolyMatrix> root_subgroup_matrices(RootedKind kind, int n, std::uint32_t p) {
    std::vector<PolyMatrix> out;
    int np = n + 1;
    switch (kind) {
        case RootedKind::GL:
        case RootedKind::SL: {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    IntMatrix f = zero_int(n);
                    f[i - 1][j - 1] = 1;
                    out.push_back(one_parameter_subgroup(f, p));
                }
            break;
        }
        case RootedKind::SOsplit: {
            if (p == 2) throw InputError("split orthogonal machinery needs characteristic != 2");
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j || i + j == np) continue;
                    int pi = np - j, pj = np - i;  // paired position
                    if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;
                    IntMatrix f = zero_int(n);
                    f[i - 1][j - 1] += 1;
                    f[pi - 1][pj - 1] -= 1;
                    out.push_back(one_parameter_subgroup(f, p));
                }
            break;
        }
        case RootedKind::Spsplit: {
            if (p == 2) throw InputError("split symplectic machinery needs characteristic != 2");
            if (n % 2 != 0) throw InputError("split symplectic group needs even n");
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    if (i + j == np) continue;  // long roots handled below
                    int pi = np - j, pj = np - i;
                    if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;
                    IntMatrix f = zero_int(n);
                    f[i - 1][j - 1] += 1;
                    f[pi - 1][pj - 1] -= split_sign(kind, i, n) * split_sign(kind, j, n);
                    out.push_back(one_parameter_subgroup(f, p));
                }
            for (int i = 1; i <= n; ++i) {
                IntMatrix f = zero_int(n);
                f[i - 1][np - i - 1] = 1;
                out.push_back(one_parameter_subgroup(f, p));
            }
            break;
        }
    }
    return out;
}

InvarianceResult is_invariant(const Poly& f, const GroupSpec& H, const RingCtx& ctx) {
    check_in_ring(f, ctx);
    InvarianceResult res;
    res.invariant = true;

    if (H.is_diagonal()) {
        const auto& d = H.diagonal();
        d.validate(ctx.n);
        for (const auto& [m, c] : f.terms()) {
            if (!diagonal_weight_vanishes(d, row_degrees(m, ctx.n))) {
                res.invariant = false;
                res.witness = "monomial with nonzero character weight: " + m.str();
                return res;
            }
        }
        return res;
    }

    if (std::holds_alternative<GeneratedSpec>(H.v)) {
        const auto& g = std::get<GeneratedSpec>(H.v);
        g.validate(ctx.n, ctx.p);
        for (std::size_t k = 0; k < g.generators.size(); ++k) {
            ScalarMatrix h = g.instantiate(k, ctx.p);
            Poly moved = act_rows(f, h.inverse(), ctx);
            if (moved != f) {
                res.invariant = false;
                res.witness = "generator #" + std::to_string(k + 1) + " moves the polynomial";
                return res;
            }
        }
        return res;
    }

    if (H.is_rooted()) {
        const auto& r = H.rooted();
        if (r.n != ctx.n) throw InputError("rooted group dimension differs from the ring");
        for (const auto& [m, c] : f.terms()) {
            if (!torus_invariant_rowdegrees(r.kind, r.n, row_degrees(m, ctx.n))) {
                res.invariant = false;
                res.witness = "monomial with nonzero torus weight: " + m.str();
                return res;
            }
        }
        auto roots = root_subgroup_matrices(r.kind, r.n, ctx.p);
        for (std::size_t k = 0; k < roots.size(); ++k) {
            Poly moved = act_rows(f, roots[k], ctx);
            if (moved != f) {
                res.invariant = false;
                res.witness = "root subgroup #" + std::to_string(k + 1) +
                              " moves the polynomial; difference " + (moved - f).str();
                return res;
            }
        }
        return res;
    }

    const auto& b = H.block_unipotent();
    if (b.n() != ctx.n) throw InputError("block structure does not sum to n");
    PolyMatrix u(ctx.n, std::vector<Poly>(ctx.n, Poly::zero(ctx.p)));
    int param = 1;
    for (int i = 1; i <= ctx.n; ++i) u[i - 1][i - 1] = Poly::constant(1, ctx.p);
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = 1; j <= ctx.n; ++j)
            if (b.block_of(j) > b.block_of(i)) u[i - 1][j - 1] = Poly::variable(VarId::t(param++), ctx.p);
    Poly moved = act_rows(f, u, ctx);
    if (moved != f) {
        res.invariant = false;
        res.witness = "generic block-unipotent substitution moves the polynomial";
    }
    return res;
}

namespace {

void enumerate_monomials(const std::vector<VarId>& vars, std::size_t idx, int budget, Monomial cur,
                         std::vector<Monomial>& out) {
    if (idx == vars.size()) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        Monomial next = e == 0 ? cur : cur * Monomial::var(vars[idx], e);
        enumerate_monomials(vars, idx + 1, budget - e, next, out);
    }
}

}  // namespace

std::vector<Monomial> invariant_monomials(const GroupSpec& H, const RingCtx& ctx, int maxDeg) {
    if (!H.is_diagonal()) throw InputError("invariant monomial enumeration needs a diagonal group");
    const auto& d = H.diagonal();
    d.validate(ctx.n);
    std::vector<VarId> vars;
    for (int j = 1; j <= ctx.d; ++j)
        for (int i = 1; i <= ctx.n; ++i) vars.push_back(VarId::x(i, j));
    std::vector<Monomial> all;
    enumerate_monomials(vars, 0, maxDeg, Monomial(), all);
    std::vector<Monomial> out;
    for (const auto& m : all)
        if (diagonal_weight_vanishes(d, row_degrees(m, ctx.n))) out.push_back(m);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.less_than(b); });
    return out;
}

std::vector<Monomial> minimal_monomial_generators(const GroupSpec& H, const RingCtx& ctx, int maxDeg) {
    std::vector<Monomial> inv = invariant_monomials(H, ctx, maxDeg);
    std::unordered_set<Monomial, MonomialHash> invariant_set(inv.begin(), inv.end());
    std::vector<Monomial> gens;
    for (const auto& m : inv) {
        std::uint64_t deg = m.total_degree();
        if (deg == 0) continue;
        bool composite = false;
        for (const auto& q : inv) {
            std::uint64_t dq = q.total_degree();
            if (dq == 0) continue;
            if (dq * 2 > deg) break;  // inv is sorted, ascending degree first
            if (!q.divides(m)) continue;
            if (invariant_set.count(q.quotient_of(m))) {
                composite = true;
                break;
            }
        }
        if (!composite) gens.push_back(m);
    }
    return gens;
}

Poly split_pairing(RootedKind kind, int i, int j, const RingCtx& ctx) {
    if (kind != RootedKind::SOsplit && kind != RootedKind::Spsplit)
        throw InputError("split pairing is defined for the orthogonal/symplectic kinds");
    if (ctx.p == 2) throw InputError("split pairing needs characteristic != 2");
    if (kind == RootedKind::Spsplit && ctx.n % 2 != 0)
        throw InputError("split symplectic pairing needs even n");
    Poly out(ctx.p);
    for (int q = 1; q <= ctx.n; ++q) {
        long long sign = kind == RootedKind::Spsplit ? split_sign(RootedKind::Spsplit, q, ctx.n) : 1;
        out += Poly::variable(VarId::x(q, i), ctx.p) * Poly::variable(VarId::x(ctx.n + 1 - q, j), ctx.p) *
               Poly::constant(sign, ctx.p);
    }
    return out;
}

Poly gram_determinant(RootedKind kind, int r, const RingCtx& ctx) {
    PolyMatrix m(r, std::vector<Poly>(r, Poly::zero(ctx.p)));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) m[i - 1][j - 1] = split_pairing(kind, i, j, ctx);
    return poly_det(m);
}

Poly gram_pfaffian(int m2, const RingCtx& ctx) {
    PolyMatrix m(m2, std::vector<Poly>(m2, Poly::zero(ctx.p)));
    for (int i = 1; i <= m2; ++i)
        for (int j = 1; j <= m2; ++j) m[i - 1][j - 1] = split_pairing(RootedKind::Spsplit, i, j, ctx);
    return poly_pfaffian(m);
}

std::vector<Poly> classical_generators(RootedKind kind, const RingCtx& ctx) {
    std::vector<Poly> out;
    auto all_minors = [&]() {
        std::vector<int> rows;
        for (int i = 1; i <= ctx.n; ++i) rows.push_back(i);
        for (const auto& cols : increasing_subsets(ctx.d, ctx.n)) out.push_back(minor({rows, cols}, ctx));
    };
    switch (kind) {
        case RootedKind::GL:
            throw InputError("GL has no nonconstant vector invariants to generate");
        case RootedKind::SL:
            all_minors();
            break;
        case RootedKind::SOsplit:
            if (ctx.p == 2) throw InputError("orthogonal generators need characteristic != 2");
            all_minors();
            for (int i = 1; i <= ctx.d; ++i)
                for (int j = i; j <= ctx.d; ++j) out.push_back(split_pairing(kind, i, j, ctx));
            break;
        case RootedKind::Spsplit:
            if (ctx.p == 2) throw InputError("symplectic generators need characteristic != 2");
            if (ctx.n % 2 != 0) throw InputError("symplectic generators need even n");
            for (int i = 1; i <= ctx.d; ++i)
                for (int j = i + 1; j <= ctx.d; ++j) out.push_back(split_pairing(kind, i, j, ctx));
            break;
    }
    return out;
}

std::vector<ScalarMatrix> group_closure(const std::vector<ScalarMatrix>& gens, std::size_t cap) {
    if (gens.empty()) return {};
    std::size_t n = gens.front().rows();
    std::uint32_t p = gens.front().characteristic();
    std::vector<ScalarMatrix> elements;
    std::set<std::string> seen;
    std::deque<std::size_t> queue;
    auto push = [&](const ScalarMatrix& m) {
        std::string key = m.str();
        if (seen.count(key)) return;
        if (elements.size() >= cap)
            throw CapExceeded("group closure exceeded the cap of " + std::to_string(cap) + " elements");
        seen.insert(key);
        elements.push_back(m);
        queue.push_back(elements.size() - 1);
    };
    push(ScalarMatrix::identity(n, p));
    for (const auto& g : gens) push(g);
    while (!queue.empty()) {
        std::size_t idx = queue.front();
        queue.pop_front();
        for (const auto& g : gens) push(elements[idx] * g);
    }
    return elements;
}

std::vector<Poly> orbit_chern(const ScalarMatrix& ell, const GroupSpec& H, const RingCtx& ctx,
                              std::size_t closure_cap) {
    if (!std::holds_alternative<GeneratedSpec>(H.v))
        throw InputError("orbit Chern classes need a generated finite group");
    const auto& g = std::get<GeneratedSpec>(H.v);
    if (!g.finite) throw InputError("orbit Chern classes need a finite group");
    g.validate(ctx.n, ctx.p);
    std::vector<ScalarMatrix> gens;
    for (std::size_t k = 0; k < g.generators.size(); ++k) gens.push_back(g.instantiate(k, ctx.p));
    std::vector<ScalarMatrix> closure =
        gens.empty() ? std::vector<ScalarMatrix>{ScalarMatrix::identity(ctx.n, ctx.p)}
                     : group_closure(gens, closure_cap);

    // orbit h.ell corresponds to the coefficient matrix (h^-1)^T C; the full
    // group is closed under inversion so transposes suffice
    std::map<std::string, ScalarMatrix> orbit;
    for (const auto& h : closure) {
        ScalarMatrix moved = h.transpose() * ell;
        orbit.emplace(moved.str(), moved);
    }

    std::uint32_t p = ctx.p;
    std::vector<Poly> coeffs{Poly::constant(1, p)};  // ascending powers of the formal variable
    for (const auto& [key, m] : orbit) {
        Poly lin = functional_poly(m);
        std::vector<Poly> next(coeffs.size() + 1, Poly::zero(p));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];        // times the formal variable
            next[k] += coeffs[k] * lin;      // times the functional
        }
        coeffs = std::move(next);
    }
    std::size_t r = orbit.size();
    std::vector<Poly> out;
    for (std::size_t k = 0; k < r; ++k) out.push_back(coeffs[r - 1 - k]);
    return out;
}

std::vector<std::vector<int>> invariant_row_sets(const BlockUnipotentSpec& spec) {
    int n = spec.n();
    int m = static_cast<int>(spec.blocks.size());
    std::vector<std::vector<int>> block_members(m);
    for (int i = 1; i <= n; ++i) block_members[spec.block_of(i) - 1].push_back(i);

    std::vector<std::vector<int>> out;
    for (int t = 0; t < m; ++t) {
        std::vector<int> tail;
        for (int u = t + 1; u < m; ++u)
            for (int i : block_members[u]) tail.push_back(i);
        const auto& blk = block_members[t];
        int sz = static_cast<int>(blk.size());
        for (int mask = 1; mask < (1 << sz); ++mask) {
            std::vector<int> rows;
            for (int b = 0; b < sz; ++b)
                if (mask & (1 << b)) rows.push_back(blk[b]);
            rows.insert(rows.end(), tail.begin(), tail.end());
            std::sort(rows.begin(), rows.end());
            out.push_back(std::move(rows));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vilab
