#ifndef VILAB_WEIGHTS_HPP
#define VILAB_WEIGHTS_HPP

#include <map>
#include <vector>

#include "vilab/polarization.hpp"

namespace vilab {

// torus weight of the column action: entry i is the total degree in the
// variables of column i
struct GLWeight {
    std::vector<long long> e;

    GLWeight() = default;
    explicit GLWeight(std::vector<long long> entries) : e(std::move(entries)) {}
    static GLWeight of_monomial(const Monomial& m, int d);
    // fundamental-weight multiplicities (e_1 rows of length 1, ...) for a
    // dominant polynomial weight
    std::vector<int> fundamental_multiplicities() const;

    GLWeight operator+(const GLWeight& o) const;
    bool operator==(const GLWeight& o) const { return e == o.e; }
    bool operator<(const GLWeight& o) const { return e < o.e; }
    bool is_dominant() const;
    std::string str() const;
};

// sum over positive roots of the paired coroot values; for the column group
// this is sum_{i<j} (e_i - e_j) = sum_i (d+1-2i) e_i
long long h_value(const GLWeight& w);

std::map<GLWeight, Poly> t_weight_decompose(const Poly& f, const RingCtx& ctx);

// largest h over all torus weights of the orbit span, per homogeneous part
long long filtration_level(const Poly& f, const RingCtx& ctx);

// the weight components of f sitting at its filtration level (may be zero)
Poly phi_leading(const Poly& f, const RingCtx& ctx);

// Image of a filtration class in the hull, realized on the opposite-coset
// side: expand the generic column action, keep the X-weight components at
// the filtration level, and pair them as (row part) (x) (group part). Each
// term is weight-pure: every uPart monomial has column-degree omega and
// every gPart monomial has row-degree omega, the pairing condition of the
// hull.
struct HullElement {
    struct Term {
        GLWeight omega;
        Poly u;  // monic
        Poly g;
        Term() : u(0), g(0) {}
    };
    long long level = 0;
    std::uint64_t degree = 0;
    std::vector<Term> terms;

    Poly expand(std::uint32_t p) const;  // sum of uPart * gPart
    nlohmann::json to_json() const;
};

HullElement phi_prime(const Poly& f, const RingCtx& ctx);

// standard-bitableau basis of the dual Weyl module realization in the group
// coordinates: left rows are 1..r, right rows standard with entries <= d;
// mults[r-1] rows of length r
std::vector<Poly> y_prime_basis(const std::vector<int>& mults, int d, std::uint32_t p);

// independent enumeration oracle: number of semistandard tableaux (weakly
// increasing rows, strictly increasing columns) of the conjugate shape with
// entries <= d
std::uint64_t semistandard_count_conjugate(const std::vector<int>& mults, int d);

bool product_rule_check(const std::vector<int>& w1, const std::vector<int>& w2, int d,
                        std::uint32_t p, std::size_t dim_cap = 100000);

struct CoveragePair {
    Poly a;          // U-invariant, weight omega
    GLWeight omega;
    std::string label;
    CoveragePair() : a(0) {}
};

struct CoverageRecord {
    std::string pair;
    std::vector<long long> weight;
    bool covered = false;
    bool indeterminate = false;
    std::uint64_t degree = 0;
    std::string note;
    nlohmann::json to_json() const;
};

// For each (a, omega): every basis element y of the dual-module realization
// must lie, paired as a (x) y, in the span of the hull images of a
// weight-refined spanning set of the polarized graded component at deg(a).
std::vector<CoverageRecord> check_hull_coverage(const std::vector<CoveragePair>& uGens,
                                                const std::vector<Poly>& algGens,
                                                const RingCtx& ctx, const Caps& caps = {});

}  // namespace vilab

#endif
