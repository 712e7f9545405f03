#include "vilab/polarization.hpp"

#include <algorithm>
#include <functional>

namespace vilab {

ModuleSpan module_span(const Poly& f, const RingCtx& ctx) {
    check_in_ring(f, ctx);
    if (f.is_zero()) throw InputError("module span of the zero polynomial");
    if (!f.uses_only_family(Family::X))
        throw InputError("module span expects a polynomial in matrix variables only");
    if (!f.is_homogeneous())
        throw InputError("module span needs a homogeneous polynomial; split by degree first");

    Poly expanded = act_column(f, generic_group_matrix(ctx.d, ctx.p), ctx);

    // coefficients of the distinct G-monomials, in canonical G-monomial order
    std::map<Monomial, Poly, MonomialLess> by_g;
    for (const auto& [m, c] : expanded.terms()) {
        auto [gpart, xpart] = m.split_family(Family::G);
        auto [it, fresh] = by_g.try_emplace(gpart, ctx.p);
        it->second += Poly::term(xpart, c);
    }

    ModuleSpan span;
    span.seed = f;
    span.degree = f.total_degree();
    span.basis = SpanBasis(ctx.p);
    for (const auto& [g, coeff] : by_g) span.basis.insert(coeff);
    span.elements = span.basis.row_polys();
    for (const auto& e : span.elements)
        if (!e.is_homogeneous() || e.total_degree() != span.degree)
            throw InputError("internal: module span element of unexpected degree");
    return span;
}

Poly MembershipCertificate::expand(std::uint32_t p) const {
    Poly total(p);
    for (const auto& term : combination) {
        Poly prod = Poly::constant(term.coeff);
        for (const auto& f : term.factors) prod = prod * f;
        total += prod;
    }
    return total;
}

nlohmann::json MembershipCertificate::to_json() const {
    nlohmann::json j;
    switch (verdict) {
        case Verdict::member: j["verdict"] = "member"; break;
        case Verdict::nonmember: j["verdict"] = "nonmember"; break;
        case Verdict::indeterminate: j["verdict"] = "indeterminate"; break;
    }
    j["degree"] = degree;
    if (verdict == Verdict::member) {
        nlohmann::json comb = nlohmann::json::array();
        for (const auto& term : combination) {
            nlohmann::json t;
            t["coeff"] = term.coeff.str();
            t["factors"] = nlohmann::json::array();
            for (const auto& f : term.factors) t["factors"].push_back(f.str());
            comb.push_back(t);
        }
        j["combination"] = comb;
    } else if (verdict == Verdict::nonmember) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : residual.terms()) terms.push_back({m.str(), c.str()});
        j["residualTerms"] = terms;
    } else {
        j["note"] = note;
    }
    return j;
}

PolarizedAlgebra::PolarizedAlgebra(std::vector<Poly> gens, const RingCtx& ctx, Caps caps)
    : ctx_(ctx), caps_(caps), gens_(std::move(gens)) {
    RingCtx square(ctx.n, ctx.n, ctx.p);
    for (const auto& g : gens_) {
        if (g.is_zero()) throw InputError("zero generator");
        if (!g.is_homogeneous()) throw InputError("generators must be homogeneous");
        if (g.total_degree() == 0) throw InputError("constant generator is redundant");
        embed_j(g, RingCtx(ctx.n, ctx.d, ctx.p));  // validates square-ring support
        check_in_ring(g, square);
        modules_.push_back(module_span(g, ctx_));
        gen_degrees_.push_back(g.total_degree());
    }
}

const PolarizedAlgebra::Slice& PolarizedAlgebra::slice(std::uint64_t degree) {
    auto it = slices_.find(degree);
    if (it != slices_.end()) return it->second;
    Slice s;
    s.basis = SpanBasis(ctx_.p, /*track_inputs=*/true);
    for (const auto& mod : modules_) {
        if (mod.degree != degree) continue;
        for (const auto& e : mod.elements) {
            s.basis.insert(e);
            if (s.basis.stored_terms() > caps_.maxSpannedTerms)
                throw CapExceeded("spanned term cap exceeded while pooling degree " +
                                  std::to_string(degree));
        }
    }
    s.polys = s.basis.row_polys();
    return slices_.emplace(degree, std::move(s)).first->second;
}

void PolarizedAlgebra::enumerate_products(
    std::uint64_t degree,
    const std::function<bool(const std::vector<std::pair<std::uint64_t, std::size_t>>&, const Poly&)>&
        sink) {
    // distinct slice degrees that exist, ascending
    std::vector<std::uint64_t> degs;
    for (auto d : gen_degrees_) degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (auto d : degs) slice(d);  // build pools up front

    std::size_t produced = 0;
    bool stop = false;
    std::vector<std::pair<std::uint64_t, std::size_t>> chosen;

    // multisets, nondecreasing in (degree, index); factors multiplied on the fly
    std::function<void(std::uint64_t, std::size_t, std::size_t, const Poly&)> rec =
        [&](std::uint64_t remaining, std::size_t degIdx, std::size_t minIdx, const Poly& acc) {
            if (stop) return;
            if (remaining == 0) {
                if (++produced > caps_.maxProducts)
                    throw CapExceeded("product cap of " + std::to_string(caps_.maxProducts) +
                                      " exceeded at degree " + std::to_string(degree));
                if (sink(chosen, acc)) stop = true;
                return;
            }
            for (std::size_t di = degIdx; di < degs.size() && !stop; ++di) {
                std::uint64_t d = degs[di];
                if (d > remaining) break;
                const Slice& s = slices_.at(d);
                std::size_t start = di == degIdx ? minIdx : 0;
                for (std::size_t i = start; i < s.polys.size() && !stop; ++i) {
                    chosen.push_back({d, i});
                    rec(remaining - d, di, i, acc * s.polys[i]);
                    chosen.pop_back();
                }
            }
        };
    rec(degree, 0, 0, Poly::constant(1, ctx_.p));
}

SpanBasis PolarizedAlgebra::component(std::uint64_t degree) {
    SpanBasis span(ctx_.p);
    if (degree == 0) {
        span.insert(Poly::constant(1, ctx_.p));
        return span;
    }
    std::uint64_t full = full_degree_dimension(ctx_, degree);
    enumerate_products(degree, [&](const auto&, const Poly& prod) {
        span.insert(prod);
        if (span.stored_terms() > caps_.maxSpannedTerms)
            throw CapExceeded("spanned term cap exceeded at degree " + std::to_string(degree));
        return span.dim() >= full;  // the whole degree space: nothing left to add
    });
    return span;
}

MembershipCertificate PolarizedAlgebra::member_homogeneous(const Poly& f) {
    MembershipCertificate cert;
    cert.degree = f.total_degree();
    cert.residual = Poly::zero(ctx_.p);
    if (f.is_zero()) {
        cert.verdict = MembershipCertificate::Verdict::member;
        return cert;
    }
    if (cert.degree == 0) {
        cert.verdict = MembershipCertificate::Verdict::member;
        cert.combination.push_back({f.leading_coefficient(), {}});
        return cert;
    }

    SpanBasis span(ctx_.p, /*track_inputs=*/true);
    std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>> products;
    bool found = false;
    std::size_t since_check = 0;
    try {
        enumerate_products(cert.degree, [&](const auto& factors, const Poly& prod) {
            products.push_back(factors);
            bool grew = span.insert(prod);
            if (span.stored_terms() > caps_.maxSpannedTerms)
                throw CapExceeded("spanned term cap exceeded at degree " + std::to_string(cert.degree));
            // early exit once the query reduces to zero; checking on growth
            // keeps the result and certificate deterministic
            if (grew && ++since_check >= 16) {
                since_check = 0;
                if (span.contains(f)) {
                    found = true;
                    return true;
                }
            }
            return false;
        });
    } catch (const CapExceeded& e) {
        cert.verdict = MembershipCertificate::Verdict::indeterminate;
        cert.note = e.what();
        return cert;
    }
    (void)found;

    auto res = span.member(f);
    if (!res.member) {
        cert.verdict = MembershipCertificate::Verdict::nonmember;
        cert.residual = res.residual;
        return cert;
    }
    cert.verdict = MembershipCertificate::Verdict::member;
    for (const auto& [input_idx, coeff] : res.coordinates) {
        CombinationTerm term;
        term.coeff = coeff;
        for (const auto& [deg, idx] : products[input_idx])
            term.factors.push_back(slices_.at(deg).polys[idx]);
        cert.combination.push_back(std::move(term));
    }
    if (cert.expand(ctx_.p) != f)
        throw InputError("internal: member combination failed to re-expand");
    return cert;
}

MembershipCertificate PolarizedAlgebra::member(const Poly& f) {
    check_in_ring(f, ctx_);
    if (!f.uses_only_family(Family::X))
        throw InputError("membership queries expect matrix variables only");
    auto parts = f.homogeneous_parts();
    if (parts.size() <= 1) return member_homogeneous(f);

    // graded algebra: membership holds part by part
    MembershipCertificate total;
    total.degree = f.total_degree();
    total.residual = Poly::zero(ctx_.p);
    total.verdict = MembershipCertificate::Verdict::member;
    for (const auto& [deg, part] : parts) {
        MembershipCertificate c = member_homogeneous(part);
        if (c.verdict == MembershipCertificate::Verdict::indeterminate) {
            total.verdict = c.verdict;
            total.note = c.note;
            total.combination.clear();
            return total;
        }
        if (c.verdict == MembershipCertificate::Verdict::nonmember) {
            total.verdict = c.verdict;
            total.residual += c.residual;
            continue;
        }
        if (total.verdict == MembershipCertificate::Verdict::member)
            for (auto& t : c.combination) total.combination.push_back(std::move(t));
    }
    if (total.verdict != MembershipCertificate::Verdict::member) total.combination.clear();
    return total;
}

PolarizedAlgebra::PRootResult PolarizedAlgebra::p_root_level(const Poly& f, int mMax) {
    if (ctx_.p == 0) throw InputError("p-root search needs positive characteristic");
    PRootResult out;
    out.searched_up_to = mMax;
    std::uint64_t power = 1;
    for (int m = 0; m <= mMax; ++m) {
        MembershipCertificate cert = member(poly_pow(f, power));
        if (cert.verdict == MembershipCertificate::Verdict::indeterminate) {
            out.certificate = cert;
            return out;
        }
        if (cert.is_member()) {
            out.level = m;
            out.power = power;
            out.certificate = cert;
            return out;
        }
        power *= ctx_.p;
    }
    out.certificate.verdict = MembershipCertificate::Verdict::nonmember;
    out.certificate.note = "no level up to " + std::to_string(mMax);
    return out;
}

PolarizedAlgebra::DeltaPowerResult PolarizedAlgebra::delta_power_level(const Poly& f, int eMax) {
    DeltaPowerResult out;
    out.searched_up_to = eMax;
    Poly d = delta(ctx_);
    Poly query = f;
    for (int e = 0; e <= eMax; ++e) {
        MembershipCertificate cert = member(query);
        if (cert.verdict == MembershipCertificate::Verdict::indeterminate) {
            out.certificate = cert;
            return out;
        }
        if (cert.is_member()) {
            out.exponent = e;
            out.certificate = cert;
            return out;
        }
        query = query * d;
    }
    out.certificate.verdict = MembershipCertificate::Verdict::nonmember;
    out.certificate.note = "no exponent up to " + std::to_string(eMax);
    return out;
}

SpanBasis polarized_component(const std::vector<Poly>& gens, const RingCtx& ctx,
                              std::uint64_t degree, const Caps& caps) {
    PolarizedAlgebra alg(gens, ctx, caps);
    return alg.component(degree);
}

MembershipCertificate is_member(const Poly& f, const std::vector<Poly>& gens, const RingCtx& ctx,
                                const Caps& caps) {
    PolarizedAlgebra alg(gens, ctx, caps);
    return alg.member(f);
}

PolarizedAlgebra::PRootResult p_root_level(const Poly& f, const std::vector<Poly>& gens,
                                           const RingCtx& ctx, int mMax, const Caps& caps) {
    PolarizedAlgebra alg(gens, ctx, caps);
    return alg.p_root_level(f, mMax);
}

PolarizedAlgebra::DeltaPowerResult delta_power_level(const Poly& f, const std::vector<Poly>& gens,
                                                     const RingCtx& ctx, int eMax, const Caps& caps) {
    PolarizedAlgebra alg(gens, ctx, caps);
    return alg.delta_power_level(f, eMax);
}

std::uint64_t full_degree_dimension(const RingCtx& ctx, std::uint64_t degree) {
    // C(vars + degree - 1, degree) with vars = n*d, saturating at 2^63
    std::uint64_t vars = static_cast<std::uint64_t>(ctx.n) * ctx.d;
    BigInt num = 1, den = 1;
    for (std::uint64_t k = 1; k <= degree; ++k) {
        num *= vars + k - 1;
        den *= k;
    }
    BigInt c = num / den;
    if (c > BigInt(std::uint64_t(1) << 62)) return std::uint64_t(1) << 62;
    return c.convert_to<std::uint64_t>();
}

}  // namespace vilab
