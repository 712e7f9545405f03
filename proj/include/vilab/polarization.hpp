#ifndef VILAB_POLARIZATION_HPP
#define VILAB_POLARIZATION_HPP

#include <map>
#include <optional>
#include <vector>

#include "vilab/matrix_ring.hpp"
#include "vilab/span.hpp"

namespace vilab {

struct Caps {
    std::size_t maxSpannedTerms = 200000;
    std::size_t maxProducts = 100000;
    std::size_t groupClosureCap = 10000;
    int mMax = 4;           // p-root search depth
    int eMax = 6;           // determinant-power search depth
    int coverageDegreeCap = 8;
};

// Linear span of the full column-group orbit of a homogeneous polynomial,
// computed by one generic-matrix expansion: the coefficients of the distinct
// G-monomials span the orbit because the base field embeds into an infinite
// one where the group is dense.
struct ModuleSpan {
    Poly seed;
    std::uint64_t degree = 0;
    SpanBasis basis;
    std::vector<Poly> elements;  // reduced basis rows

    ModuleSpan() : seed(0), basis(0) {}
};

ModuleSpan module_span(const Poly& f, const RingCtx& ctx);

struct CombinationTerm {
    Scalar coeff;
    std::vector<Poly> factors;
};

struct MembershipCertificate {
    enum class Verdict { member, nonmember, indeterminate };
    Verdict verdict = Verdict::indeterminate;
    std::uint64_t degree = 0;
    std::vector<CombinationTerm> combination;  // member only
    Poly residual;                             // nonmember only
    std::string note;                          // indeterminate: which cap

    MembershipCertificate() : residual(0) {}
    bool is_member() const { return verdict == Verdict::member; }
    // exact re-expansion of the member combination
    Poly expand(std::uint32_t p) const;
    nlohmann::json to_json() const;
};

// The graded algebra generated by the orbits of the embedded square-ring
// generators. Degree slices of the factor pool are row-reduced once (with
// provenance) and products are enumerated over the reduced bases; the span
// is identical and the enumeration stays within the product cap.
class PolarizedAlgebra {
public:
    PolarizedAlgebra(std::vector<Poly> gens, const RingCtx& ctx, Caps caps = {});

    const RingCtx& ctx() const { return ctx_; }
    const std::vector<ModuleSpan>& modules() const { return modules_; }

    // spanning basis of the degree-graded component (no provenance tracking)
    SpanBasis component(std::uint64_t degree);
    std::size_t component_dim(std::uint64_t degree) { return component(degree).dim(); }

    MembershipCertificate member(const Poly& f);

    struct PRootResult {
        std::optional<int> level;
        std::uint64_t power = 1;  // p^level on success
        MembershipCertificate certificate;
        int searched_up_to = 0;
    };
    PRootResult p_root_level(const Poly& f, int mMax);

    struct DeltaPowerResult {
        std::optional<int> exponent;
        MembershipCertificate certificate;
        int searched_up_to = 0;
    };
    DeltaPowerResult delta_power_level(const Poly& f, int eMax);

private:
    struct Slice {
        SpanBasis basis;   // reduced factor pool at one degree, tracked
        std::vector<Poly> polys;
        Slice() : basis(0) {}
    };
    const Slice& slice(std::uint64_t degree);
    // enumerate products of slice elements with degree sum = degree, feeding
    // `sink`; sink returns true to stop early
    void enumerate_products(std::uint64_t degree,
                            const std::function<bool(const std::vector<std::pair<std::uint64_t, std::size_t>>&,
                                                     const Poly&)>& sink);
    MembershipCertificate member_homogeneous(const Poly& f);

    RingCtx ctx_;
    Caps caps_;
    std::vector<Poly> gens_;
    std::vector<ModuleSpan> modules_;
    std::map<std::uint64_t, Slice> slices_;
    std::vector<std::uint64_t> gen_degrees_;
};

// convenience wrappers matching the operation surface
SpanBasis polarized_component(const std::vector<Poly>& gens, const RingCtx& ctx,
                              std::uint64_t degree, const Caps& caps = {});
MembershipCertificate is_member(const Poly& f, const std::vector<Poly>& gens, const RingCtx& ctx,
                                const Caps& caps = {});
PolarizedAlgebra::PRootResult p_root_level(const Poly& f, const std::vector<Poly>& gens,
                                           const RingCtx& ctx, int mMax = 4, const Caps& caps = {});
PolarizedAlgebra::DeltaPowerResult delta_power_level(const Poly& f, const std::vector<Poly>& gens,
                                                     const RingCtx& ctx, int eMax = 6,
                                                     const Caps& caps = {});

// number of monomials of the given total degree in the n*d matrix variables
std::uint64_t full_degree_dimension(const RingCtx& ctx, std::uint64_t degree);

}  // namespace vilab

#endif
