#include "vilab/scalar.hpp"

namespace vilab {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

void Scalar::check_characteristic(std::uint32_t p) {
    if (p == 0) return;
    if (p >= (1u << 31) || !is_prime(p))
        throw InputError("characteristic must be 0 or a prime < 2^31, got " + std::to_string(p));
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_)
        throw InputError("characteristic mismatch: " + std::to_string(a.p_) + " vs " +
                         std::to_string(b.p_));
}

Scalar Scalar::of(long long v, std::uint32_t p) {
    check_characteristic(p);
    Scalar s;
    s.p_ = p;
    if (p == 0) {
        s.q_ = BigRational(v);
    } else {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::of(const BigInt& v, std::uint32_t p) {
    check_characteristic(p);
    Scalar s;
    s.p_ = p;
    if (p == 0) {
        s.q_ = BigRational(v);
    } else {
        BigInt r = v % p;
        if (r < 0) r += p;
        s.r_ = r.convert_to<std::uint64_t>();
    }
    return s;
}

Scalar Scalar::rational(BigRational q) {
    Scalar s;
    s.p_ = 0;
    s.q_ = std::move(q);
    return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

std::uint64_t Scalar::residue() const {
    if (p_ == 0) throw InputError("residue() on a characteristic-0 scalar");
    return r_;
}

const BigRational& Scalar::rat() const {
    if (p_ != 0) throw InputError("rat() on a positive-characteristic scalar");
    return q_;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

namespace {

// extended Euclid on the residues; p prime so any nonzero r is invertible
std::uint64_t mod_inverse(std::uint64_t r, std::uint64_t p) {
    long long t = 0, nt = 1;
    long long a = static_cast<long long>(p), b = static_cast<long long>(r);
    while (b != 0) {
        long long q = a / b;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = a - q * b;
        a = b;
        b = tmp;
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::inverse() const {
    if (is_zero()) throw InputError("inverse of zero");
    Scalar s = *this;
    if (p_ == 0)
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inverse(r_, p_);
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(*this, o);
    if (p_ == 0) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(*this, o);
    if (p_ == 0) {
        q_ -= o.q_;
    } else {
        r_ = (r_ + p_ - o.r_) % p_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(*this, o);
    if (p_ == 0)
        q_ *= o.q_;
    else
        r_ = (r_ * o.r_) % p_;  // p < 2^31, product fits in 64 bits
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(r_);
    if (denominator(q_) == 1) return numerator(q_).str();
    return numerator(q_).str() + "/" + denominator(q_).str();
}

}  // namespace vilab
