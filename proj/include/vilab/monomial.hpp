#ifndef VILAB_MONOMIAL_HPP
#define VILAB_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vilab/errors.hpp"

namespace vilab {

// Variable families: X = matrix entries x(i,j), G = generic d x d group
// matrix entries g(r,s), T = formal one-parameter root/unipotent parameters
// t(k). The fixed total order is X < G < T, then column-major (j, then i).
enum class Family : std::uint8_t { X = 0, G = 1, T = 2 };

struct VarId {
    Family family = Family::X;
    std::uint32_t i = 1;  // row (X, G) or the single index (T)
    std::uint32_t j = 1;  // column (X, G); unused for T

    static VarId x(std::uint32_t i, std::uint32_t j) { return {Family::X, i, j}; }
    static VarId g(std::uint32_t r, std::uint32_t s) { return {Family::G, r, s}; }
    static VarId t(std::uint32_t k) { return {Family::T, k, 0}; }

    // encodes the fixed total order; indices limited to 16383
    std::uint32_t key() const {
        if (i >= (1u << 14) || j >= (1u << 14)) throw InputError("variable index too large");
        return (static_cast<std::uint32_t>(family) << 28) | (j << 14) | i;
    }
    static VarId from_key(std::uint32_t k) {
        VarId v;
        v.family = static_cast<Family>(k >> 28);
        v.j = (k >> 14) & 0x3fff;
        v.i = k & 0x3fff;
        return v;
    }

    std::string str() const;
};

// Sparse exponent vector; no zero exponents stored, factors sorted by key.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (VarId key, exponent)

    Monomial() = default;
    static Monomial var(VarId v, std::uint32_t e = 1);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_constant() const { return f_.empty(); }
    std::uint64_t total_degree() const;
    std::uint32_t exponent(std::uint32_t key) const;

    std::uint64_t degree_in_family(Family fam) const;
    std::uint64_t degree_in_column(Family fam, std::uint32_t col) const;
    std::uint64_t degree_in_row(Family fam, std::uint32_t row) const;

    // split into the part belonging to fam and the rest
    std::pair<Monomial, Monomial> split_family(Family fam) const;

    Monomial operator*(const Monomial& o) const;
    Monomial pow(std::uint32_t e) const;
    bool divides(const Monomial& o) const;
    Monomial quotient_of(const Monomial& numerator) const;  // numerator / *this

    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    bool operator!=(const Monomial& o) const { return !(f_ == o.f_); }

    // canonical order: graded, ties broken lexicographically in the fixed
    // VarId order (higher exponent on the earlier variable wins)
    bool less_than(const Monomial& o) const;

    std::size_t hash() const;
    std::string str() const;  // "1" for the constant monomial

private:
    std::vector<Factor> f_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.less_than(b); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace vilab

#endif
