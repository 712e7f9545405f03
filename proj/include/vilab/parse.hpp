#ifndef VILAB_PARSE_HPP
#define VILAB_PARSE_HPP

#include <cstdint>
#include <string>

#include "vilab/poly.hpp"

namespace vilab {

// Ring of n x d matrix variables, d >= n, over characteristic 0 or prime p.
struct RingCtx {
    int n = 1;
    int d = 1;
    std::uint32_t p = 0;

    RingCtx() = default;
    RingCtx(int n_, int d_, std::uint32_t p_);
    // text form "NxD@pP", e.g. "2x4@p2"; "p0" means characteristic 0
    static RingCtx parse(const std::string& text);
    std::string str() const;
};

// Polynomial text grammar (whitespace insignificant):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := integer ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' integer)?
//   var    := 'x(' i ',' j ')' | 'g(' r ',' s ')' | 't(' k ')'
// Integer coefficients are reduced mod p when p > 0. Errors report
// line/column positions.
Poly parse_poly(const std::string& text, std::uint32_t p);

// validates that every X variable of f fits inside ctx
void check_in_ring(const Poly& f, const RingCtx& ctx);

}  // namespace vilab

#endif
