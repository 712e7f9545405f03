#ifndef VILAB_SCALAR_HPP
#define VILAB_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "vilab/errors.hpp"

namespace vilab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

// Exact field element: a canonical residue in [0,p) when the characteristic
// is a prime p, a reduced rational when it is 0. Mixing characteristics in
// any binary operation throws InputError. p must be 0 or a prime < 2^31.
class Scalar {
public:
    Scalar() = default;  // zero of characteristic 0

    static Scalar zero(std::uint32_t p) { return of(0, p); }
    static Scalar one(std::uint32_t p) { return of(1, p); }
    static Scalar of(long long v, std::uint32_t p);
    static Scalar of(const BigInt& v, std::uint32_t p);
    static Scalar rational(BigRational q);

    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const;
    bool is_one() const;

    std::uint64_t residue() const;      // characteristic p only
    const BigRational& rat() const;     // characteristic 0 only

    Scalar operator-() const;
    Scalar inverse() const;             // InputError on zero

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    static void check_characteristic(std::uint32_t p);
    static void check_same(const Scalar& a, const Scalar& b);

    std::uint32_t p_ = 0;
    std::uint64_t r_ = 0;   // canonical residue, used when p_ > 0
    BigRational q_;         // used when p_ == 0
};

}  // namespace vilab

#endif
