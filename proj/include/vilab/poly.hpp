#ifndef VILAB_POLY_HPP
#define VILAB_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vilab/monomial.hpp"
#include "vilab/scalar.hpp"

namespace vilab {

// Sparse multivariate polynomial with exact coefficients. Normal form: terms
// sorted by descending canonical monomial order, no zero coefficients. The
// zero polynomial is the empty term list; every Poly carries its
// characteristic explicitly so zero stays typed.
class Poly {
public:
    using Term = std::pair<Monomial, Scalar>;

    explicit Poly(std::uint32_t p = 0) : p_(p) {}

    static Poly zero(std::uint32_t p) { return Poly(p); }
    static Poly constant(const Scalar& c);
    static Poly constant(long long v, std::uint32_t p) { return constant(Scalar::of(v, p)); }
    static Poly variable(VarId v, std::uint32_t p);
    static Poly term(const Monomial& m, const Scalar& c);
    // normalizes an arbitrary term list
    static Poly from_terms(std::vector<Term> terms, std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;

    std::uint64_t total_degree() const;  // 0 for the zero polynomial
    bool is_homogeneous() const;
    // degree -> homogeneous part, ascending
    std::map<std::uint64_t, Poly> homogeneous_parts() const;

    bool uses_only_family(Family fam) const;
    std::vector<std::uint32_t> variable_keys() const;  // sorted, distinct

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly monic() const;  // leading coefficient scaled to 1

    bool operator==(const Poly& o) const { return p_ == o.p_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

    // substitution sigma: variable key -> replacement; unmapped variables stay
    Poly substitute(const std::map<std::uint32_t, Poly>& sigma) const;
    // full evaluation; every variable of the polynomial must be assigned
    Scalar evaluate(const std::map<std::uint32_t, Scalar>& point) const;

    friend Poly poly_pow(const Poly& f, std::uint64_t e);

private:
    void check_char(const Poly& o) const;

    std::uint32_t p_;
    std::vector<Term> terms_;  // descending canonical order
};

Poly poly_pow(const Poly& f, std::uint64_t e);
Poly poly_substitute(const Poly& f, const std::map<std::uint32_t, Poly>& sigma);

}  // namespace vilab

#endif
