#ifndef VILAB_GROUPS_HPP
#define VILAB_GROUPS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vilab/matrix_ring.hpp"

namespace vilab {

// H acts on row i of x through the character with free exponent row i of
// freeWeights and, per torsion block, the i-th residue mod its modulus.
struct DiagonalSpec {
    std::vector<std::vector<long long>> freeWeights;  // n rows, r columns
    struct Torsion {
        long long modulus = 0;  // >= 2
        std::vector<long long> weights;  // length n
    };
    std::vector<Torsion> torsion;

    int rows() const;
    void validate(int n) const;
};

struct GeneratedSpec {
    std::vector<std::vector<std::vector<BigRational>>> generators;  // n x n entries
    bool finite = false;

    ScalarMatrix instantiate(std::size_t idx, std::uint32_t p) const;
    void validate(int n, std::uint32_t p) const;
};

enum class RootedKind { GL, SL, SOsplit, Spsplit };

struct RootedSpec {
    RootedKind kind = RootedKind::SL;
    int n = 1;
};

// block upper unitriangular with identity diagonal blocks
struct BlockUnipotentSpec {
    std::vector<int> blocks;  // composition of n

    int n() const;
    int block_of(int row) const;  // 1-based block index
};

struct GroupSpec {
    std::variant<DiagonalSpec, GeneratedSpec, RootedSpec, BlockUnipotentSpec> v;

    static GroupSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    bool is_diagonal() const { return std::holds_alternative<DiagonalSpec>(v); }
    const DiagonalSpec& diagonal() const { return std::get<DiagonalSpec>(v); }
    bool is_rooted() const { return std::holds_alternative<RootedSpec>(v); }
    const RootedSpec& rooted() const { return std::get<RootedSpec>(v); }
    bool is_block_unipotent() const { return std::holds_alternative<BlockUnipotentSpec>(v); }
    const BlockUnipotentSpec& block_unipotent() const { return std::get<BlockUnipotentSpec>(v); }
};

struct InvarianceResult {
    bool invariant = false;
    std::string witness;  // empty when invariant
};

InvarianceResult is_invariant(const Poly& f, const GroupSpec& H, const RingCtx& ctx);

// all monomials of total degree <= maxDeg whose character weight vanishes,
// in ascending canonical order (the constant monomial qualifies)
std::vector<Monomial> invariant_monomials(const GroupSpec& H, const RingCtx& ctx, int maxDeg);

// degree-by-degree sieve: an invariant monomial is a generator iff it is not
// the product of two lower-degree invariant monomials
std::vector<Monomial> minimal_monomial_generators(const GroupSpec& H, const RingCtx& ctx, int maxDeg);

// SL: all n x n minors. SOsplit: minors plus split inner products <x_i,x_j>,
// i <= j. Spsplit: split skew products <x_i,x_j>, i < j. char != 2 for the
// orthogonal/symplectic families, n even for Spsplit.
std::vector<Poly> classical_generators(RootedKind kind, const RingCtx& ctx);

// split bilinear pairing of columns i and j (symmetric for SOsplit,
// alternating for Spsplit)
Poly split_pairing(RootedKind kind, int i, int j, const RingCtx& ctx);
// determinant of the r x r split Gram matrix of the first columns
Poly gram_determinant(RootedKind kind, int r, const RingCtx& ctx);
// pfaffian of the leading 2m x 2m skew Gram matrix
Poly gram_pfaffian(int m2, const RingCtx& ctx);

// torus factor and one-parameter root subgroups of the split group, used by
// the connected-group invariance test (torus + all roots generate)
bool torus_invariant_rowdegrees(RootedKind kind, int n, const std::vector<std::uint64_t>& rowdeg);
std::vector<PolyMatrix> root_subgroup_matrices(RootedKind kind, int n, std::uint32_t p);

// closure of a finite matrix group from generators; InputError beyond cap
std::vector<ScalarMatrix> group_closure(const std::vector<ScalarMatrix>& gens, std::size_t cap);

// orbit Chern classes: coefficients of the falling powers in
// prod_i (X + h_i . ell) over the distinct H-orbit of the functional ell,
// listed from the X^(r-1) coefficient down to the constant one
std::vector<Poly> orbit_chern(const ScalarMatrix& ell, const GroupSpec& H, const RingCtx& ctx,
                              std::size_t closure_cap = 10000);

// row sets I such that minor(I|J) is fixed by the block unipotent group
std::vector<std::vector<int>> invariant_row_sets(const BlockUnipotentSpec& spec);

}  // namespace vilab

#endif
