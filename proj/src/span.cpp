#include "vilab/span.hpp"

#include <algorithm>

namespace vilab {

SpanBasis::SpanBasis(std::uint32_t characteristic, bool track_inputs)
    : p_(characteristic), track_(track_inputs) {}

std::uint32_t SpanBasis::column_of(const Monomial& m) {
    auto it = col_of_monomial_.find(m);
    if (it != col_of_monomial_.end()) return it->second;
    std::uint32_t col = static_cast<std::uint32_t>(monomial_of_col_.size());
    monomial_of_col_.push_back(m);
    col_of_monomial_.emplace(m, col);
    return col;
}

SpanBasis::SparseVec SpanBasis::to_vec(const Poly& f) {
    if (f.characteristic() != p_) throw InputError("span characteristic mismatch");
    SparseVec v;
    v.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) v.push_back({column_of(m), c});
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

namespace {

// v += c * r, both sorted by column; zero results dropped
void axpy(SpanBasis::SparseVec& v, const Scalar& c, const SpanBasis::SparseVec& r) {
    SpanBasis::SparseVec out;
    out.reserve(v.size() + r.size());
    auto a = v.begin();
    auto b = r.begin();
    while (a != v.end() && b != r.end()) {
        if (a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            Scalar s = c * b->second;
            if (!s.is_zero()) out.push_back({b->first, s});
            ++b;
        } else {
            Scalar s = a->second + c * b->second;
            if (!s.is_zero()) out.push_back({a->first, s});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, v.end());
    for (; b != r.end(); ++b) {
        Scalar s = c * b->second;
        if (!s.is_zero()) out.push_back({b->first, s});
    }
    v = std::move(out);
}

}  // namespace

void SpanBasis::reduce(SparseVec& v, std::vector<std::pair<std::size_t, Scalar>>* coords) const {
    // rows are fully reduced: a row's pivot is its smallest column and no
    // other row contains it, so one ascending pass suffices
    std::size_t i = 0;
    while (i < v.size()) {
        auto it = row_of_pivot_.find(v[i].first);
        if (it == row_of_pivot_.end()) {
            ++i;
            continue;
        }
        Scalar c = v[i].second;  // pivot entries are monic
        if (coords) coords->push_back({it->second, c});
        axpy(v, -c, rows_[it->second].v);
    }
}

bool SpanBasis::insert(const Poly& f) {
    std::size_t input_index = inputs_seen_++;
    SparseVec v = to_vec(f);
    std::vector<std::pair<std::size_t, Scalar>> used;
    reduce(v, track_ ? &used : nullptr);
    if (v.empty()) return false;

    Row row;
    Scalar lead_inv = v.front().second.inverse();
    for (auto& [col, c] : v) c *= lead_inv;
    row.v = std::move(v);
    if (track_) {
        SparseVec comb{{static_cast<std::uint32_t>(input_index), Scalar::one(p_)}};
        for (const auto& [r, c] : used) axpy(comb, -c, rows_[r].comb);
        for (auto& [idx, c] : comb) c *= lead_inv;
        row.comb = std::move(comb);
    }

    std::uint32_t pivot = row.v.front().first;
    // back-substitution keeps the echelon fully reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto& existing = rows_[r].v;
        auto it = std::lower_bound(existing.begin(), existing.end(), pivot,
                                   [](const auto& a, std::uint32_t k) { return a.first < k; });
        if (it == existing.end() || it->first != pivot) continue;
        Scalar c = it->second;
        stored_terms_ -= existing.size();
        axpy(existing, -c, row.v);
        stored_terms_ += existing.size();
        if (track_) axpy(rows_[r].comb, -c, row.comb);
    }

    stored_terms_ += row.v.size();
    row_of_pivot_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

std::vector<std::size_t> SpanBasis::pivot_order() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) order[r] = r;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rows_[a].v.front().first < rows_[b].v.front().first;
    });
    return order;
}

SpanBasis::MemberResult SpanBasis::member(const Poly& f) const {
    if (f.characteristic() != p_) throw InputError("span characteristic mismatch");
    MemberResult res;
    res.residual = Poly::zero(p_);

    SparseVec v;
    Poly unknown(p_);
    for (const auto& [m, c] : f.terms()) {
        auto it = col_of_monomial_.find(m);
        if (it == col_of_monomial_.end())
            unknown += Poly::term(m, c);  // untouched by any row
        else
            v.push_back({it->second, c});
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::pair<std::size_t, Scalar>> used;
    reduce(v, &used);

    res.residual = to_poly(v) + unknown;
    res.member = res.residual.is_zero();
    if (res.member) {
        if (track_) {
            SparseVec coords;
            for (const auto& [r, c] : used) axpy(coords, c, rows_[r].comb);
            for (const auto& [idx, c] : coords) res.coordinates.push_back({idx, c});
        } else {
            // coordinates over the pivot-ordered rows, matching row_polys()
            std::vector<std::size_t> order = pivot_order();
            std::vector<std::size_t> position(order.size());
            for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
            for (const auto& [r, c] : used) res.coordinates.push_back({position[r], c});
            std::sort(res.coordinates.begin(), res.coordinates.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }
    return res;
}

Poly SpanBasis::to_poly(const SparseVec& v) const {
    std::vector<Poly::Term> terms;
    terms.reserve(v.size());
    for (const auto& [col, c] : v) terms.push_back({monomial_of_col_[col], c});
    return Poly::from_terms(std::move(terms), p_);
}

Poly SpanBasis::row_poly(std::size_t r) const {
    if (r >= rows_.size()) throw InputError("row index out of range");
    return to_poly(rows_[pivot_order()[r]].v);
}

std::vector<Poly> SpanBasis::row_polys() const {
    std::vector<Poly> out;
    out.reserve(rows_.size());
    for (std::size_t r : pivot_order()) out.push_back(to_poly(rows_[r].v));
    return out;
}

std::vector<Monomial> SpanBasis::pivot_monomials() const {
    std::vector<Monomial> out;
    out.reserve(rows_.size());
    for (std::size_t r : pivot_order()) out.push_back(monomial_of_col_[rows_[r].v.front().first]);
    return out;
}

std::string SpanBasis::fingerprint() const {
    std::string s = "cols:";
    for (const auto& m : monomial_of_col_) s += m.str() + ";";
    s += "|rows:";
    for (const auto& row : row_polys()) s += row.str() + ";";
    return s;
}

}  // namespace vilab
