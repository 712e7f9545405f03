#ifndef VILAB_TEST_UTIL_HPP
#define VILAB_TEST_UTIL_HPP

#include <random>

#include "vilab/matrix_ring.hpp"

namespace vilab::testutil {

inline Poly P(const std::string& text, std::uint32_t p) { return parse_poly(text, p); }

inline Poly xv(int i, int j, std::uint32_t p) { return Poly::variable(VarId::x(i, j), p); }

inline Scalar random_scalar(std::mt19937_64& rng, std::uint32_t p) {
    if (p == 0) {
        std::uniform_int_distribution<long long> num(-9, 9);
        std::uniform_int_distribution<long long> den(1, 5);
        return Scalar::rational(BigRational(num(rng), den(rng)));
    }
    std::uniform_int_distribution<long long> v(0, p - 1);
    return Scalar::of(v(rng), p);
}

inline Poly random_poly(std::mt19937_64& rng, std::uint32_t p, int n, int d, int max_terms,
                        int max_deg) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> row(1, n), col(1, d);
    Poly f(p);
    int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        Monomial m;
        int dd = deg(rng);
        for (int q = 0; q < dd; ++q) m = m * Monomial::var(VarId::x(row(rng), col(rng)));
        f += Poly::term(m, random_scalar(rng, p));
    }
    return f;
}

inline ScalarMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                  std::uint32_t p) {
    ScalarMatrix m(rows, cols, p);
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j) m.at(i, j) = random_scalar(rng, p);
    return m;
}

inline ScalarMatrix random_invertible(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    while (true) {
        ScalarMatrix m = random_matrix(rng, n, n, p);
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace vilab::testutil

#endif
