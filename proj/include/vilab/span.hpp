#ifndef VILAB_SPAN_HPP
#define VILAB_SPAN_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "vilab/poly.hpp"

namespace vilab {

// Row span of a sequence of polynomials in fully reduced row-echelon form.
// The ambient monomial index grows on demand in insertion order, which keeps
// reduction deterministic for a fixed input sequence. With `track_inputs`
// every row also carries its expression over the original inserted
// polynomials, so membership answers come with coordinates over the inputs.
class SpanBasis {
public:
    using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;  // sorted by column

    explicit SpanBasis(std::uint32_t characteristic, bool track_inputs = false);

    // returns true if the dimension grew
    bool insert(const Poly& f);

    struct MemberResult {
        bool member = false;
        // coordinates over the inserted inputs (tracking on) or over the
        // reduced rows (tracking off); only meaningful when member
        std::vector<std::pair<std::size_t, Scalar>> coordinates;
        Poly residual;
        MemberResult() : residual(0) {}
    };
    MemberResult member(const Poly& f) const;
    bool contains(const Poly& f) const { return member(f).member; }

    std::size_t dim() const { return rows_.size(); }
    std::size_t input_count() const { return inputs_seen_; }
    std::size_t stored_terms() const { return stored_terms_; }
    std::uint32_t characteristic() const { return p_; }

    // rows in pivot-column order (strictly increasing pivots)
    Poly row_poly(std::size_t r) const;
    std::vector<Poly> row_polys() const;
    // pivot monomial of each row, same order as row_polys()
    std::vector<Monomial> pivot_monomials() const;

    // canonical description, used by determinism tests
    std::string fingerprint() const;

private:
    std::vector<std::size_t> pivot_order() const;
    std::uint32_t column_of(const Monomial& m);
    SparseVec to_vec(const Poly& f);
    // reduction against current rows; when coords != nullptr accumulates the
    // row coefficients used
    void reduce(SparseVec& v, std::vector<std::pair<std::size_t, Scalar>>* coords) const;
    Poly to_poly(const SparseVec& v) const;

    struct Row {
        SparseVec v;      // monic at the pivot (first) column
        SparseVec comb;   // expression over input indices (tracking only)
    };

    std::uint32_t p_;
    bool track_;
    std::vector<Monomial> monomial_of_col_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> col_of_monomial_;
    std::vector<Row> rows_;
    std::unordered_map<std::uint32_t, std::size_t> row_of_pivot_;
    std::size_t inputs_seen_ = 0;
    std::size_t stored_terms_ = 0;
};

}  // namespace vilab

#endif
