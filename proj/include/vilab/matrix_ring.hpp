#ifndef VILAB_MATRIX_RING_HPP
#define VILAB_MATRIX_RING_HPP

#include <utility>
#include <vector>

#include "vilab/linalg.hpp"
#include "vilab/parse.hpp"
#include "vilab/poly.hpp"

#include "json.hpp"

namespace vilab {

// d x d (or n x n) matrix with polynomial entries, 1-based access
using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix poly_matrix_of(const ScalarMatrix& m);
// fully generic d x d matrix of g(r,s) variables
PolyMatrix generic_group_matrix(int d, std::uint32_t p);
// unitriangular with a distinct t(k) per free entry; first_param names t(first_param)
PolyMatrix generic_unitriangular(int d, std::uint32_t p, bool upper = true, int first_param = 0);

// view change only: f over the first n columns, regarded in the larger ring
Poly embed_j(const Poly& f, const RingCtx& ctx);

// column action x(i,j) -> sum_s x(i,s) * m(s,j); m is d x d
Poly act_column(const Poly& f, const PolyMatrix& m, const RingCtx& ctx);
Poly act_column(const Poly& f, const ScalarMatrix& m, const RingCtx& ctx);

// row substitution x(i,j) -> sum_q m(i,q) * x(q,j); m is n x n
Poly act_rows(const Poly& f, const PolyMatrix& m, const RingCtx& ctx);
Poly act_rows(const Poly& f, const ScalarMatrix& m, const RingCtx& ctx);

struct MinorSpec {
    std::vector<int> rows;  // strictly increasing, in [1,n]
    std::vector<int> cols;  // strictly increasing, in [1,d]

    static MinorSpec parse(const std::string& text);  // "(1 2 | 1 3)"
    std::string str() const;
};

Poly minor(const MinorSpec& spec, const RingCtx& ctx);
Poly minor_of(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
// determinant of the leading n x n block
Poly delta(const RingCtx& ctx);

// determinant / pfaffian over polynomial entries (Laplace / first-row expansion)
Poly poly_det(const PolyMatrix& m);
Poly poly_pfaffian(const PolyMatrix& m);

// Column reduction: for an n x d matrix with independent leading columns,
// the unique upper unitriangular u whose column j > n clears column j of x,
// so that x*u = (x_1, ..., x_n, 0, ..., 0).
ScalarMatrix column_reduce_u(const ScalarMatrix& x);

// Every linear functional on the big ring is a translated functional on the
// square ring: factor ell (as its n x d coefficient matrix) into an
// invertible d x d g and an n x n supported ellPrime with
// ell = pad(ellPrime) * g.
struct FunctionalFactorization {
    ScalarMatrix g;         // d x d invertible
    ScalarMatrix ellPrime;  // n x n
};
FunctionalFactorization factor_functional(const ScalarMatrix& ell);
// coefficient-matrix form of the column action on functionals: C -> C * g^T
ScalarMatrix functional_act(const ScalarMatrix& g, const ScalarMatrix& coeffs);
ScalarMatrix pad_functional(const ScalarMatrix& ellPrime, int d);
Poly functional_poly(const ScalarMatrix& coeffs);

// minors with arbitrary rows and columns exactly 1..r, for r = 1..n
std::vector<Poly> u_invariant_generators(const RingCtx& ctx);

struct BiTableau {
    std::vector<std::vector<int>> D;  // left rows, entries in [1,n]
    std::vector<std::vector<int>> E;  // right rows, entries in [1,d]

    static BiTableau from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    void check_shape() const;  // weakly decreasing equal shapes
};

// strictly increasing rows, weakly increasing columns, on both sides
bool is_standard(const BiTableau& bt);
// product over rows of minor(D-row | E-row)
Poly bitableau_poly(const BiTableau& bt, const RingCtx& ctx);

// all strictly increasing r-subsets of [1..m], lexicographic
std::vector<std::vector<int>> increasing_subsets(int m, int r);

}  // namespace vilab

#endif
