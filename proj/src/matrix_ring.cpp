#include "vilab/matrix_ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace vilab {

PolyMatrix poly_matrix_of(const ScalarMatrix& m) {
    PolyMatrix r(m.rows(), std::vector<Poly>(m.cols(), Poly::zero(m.characteristic())));
    for (std::size_t i = 1; i <= m.rows(); ++i)
        for (std::size_t j = 1; j <= m.cols(); ++j) r[i - 1][j - 1] = Poly::constant(m.at(i, j));
    return r;
}

PolyMatrix generic_group_matrix(int d, std::uint32_t p) {
    PolyMatrix m(d, std::vector<Poly>(d, Poly::zero(p)));
    for (int r = 1; r <= d; ++r)
        for (int s = 1; s <= d; ++s) m[r - 1][s - 1] = Poly::variable(VarId::g(r, s), p);
    return m;
}

PolyMatrix generic_unitriangular(int d, std::uint32_t p, bool upper, int first_param) {
    PolyMatrix m(d, std::vector<Poly>(d, Poly::zero(p)));
    int k = first_param;
    for (int i = 1; i <= d; ++i) m[i - 1][i - 1] = Poly::constant(1, p);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            bool free_entry = upper ? (j > i) : (i > j);
            if (free_entry) m[i - 1][j - 1] = Poly::variable(VarId::t(1 + k++), p);
        }
    return m;
}

Poly embed_j(const Poly& f, const RingCtx& ctx) {
    if (f.characteristic() != ctx.p) throw InputError("embed: characteristic mismatch");
    for (auto key : f.variable_keys()) {
        VarId v = VarId::from_key(key);
        if (v.family != Family::X) throw InputError("embed: input must use matrix variables only");
        if (static_cast<int>(v.i) > ctx.n || static_cast<int>(v.j) > ctx.n)
            throw InputError("embed: variable " + v.str() + " mentions a column or row beyond " +
                             std::to_string(ctx.n));
    }
    return f;
}

namespace {

std::map<std::uint32_t, Poly> column_substitution(const Poly& f, const PolyMatrix& m,
                                                  const RingCtx& ctx) {
    if (static_cast<int>(m.size()) != ctx.d)
        throw InputError("column action needs a d x d matrix");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != ctx.d)
            throw InputError("column action needs a d x d matrix");
    std::map<std::uint32_t, Poly> sigma;
    for (auto key : f.variable_keys()) {
        VarId v = VarId::from_key(key);
        if (v.family != Family::X) continue;
        if (static_cast<int>(v.j) > ctx.d) throw InputError("variable outside ring: " + v.str());
        Poly image(ctx.p);
        for (int s = 1; s <= ctx.d; ++s) {
            const Poly& entry = m[s - 1][v.j - 1];
            if (entry.is_zero()) continue;
            image += Poly::variable(VarId::x(v.i, s), ctx.p) * entry;
        }
        sigma.emplace(key, std::move(image));
    }
    return sigma;
}

std::map<std::uint32_t, Poly> row_substitution(const Poly& f, const PolyMatrix& m,
                                               const RingCtx& ctx) {
    if (static_cast<int>(m.size()) != ctx.n) throw InputError("row action needs an n x n matrix");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != ctx.n) throw InputError("row action needs an n x n matrix");
    std::map<std::uint32_t, Poly> sigma;
    for (auto key : f.variable_keys()) {
        VarId v = VarId::from_key(key);
        if (v.family != Family::X) continue;
        if (static_cast<int>(v.i) > ctx.n) throw InputError("variable outside ring: " + v.str());
        Poly image(ctx.p);
        for (int q = 1; q <= ctx.n; ++q) {
            const Poly& entry = m[v.i - 1][q - 1];
            if (entry.is_zero()) continue;
            image += entry * Poly::variable(VarId::x(q, v.j), ctx.p);
        }
        sigma.emplace(key, std::move(image));
    }
    return sigma;
}

}  // namespace

Poly act_column(const Poly& f, const PolyMatrix& m, const RingCtx& ctx) {
    return f.substitute(column_substitution(f, m, ctx));
}

Poly act_column(const Poly& f, const ScalarMatrix& m, const RingCtx& ctx) {
    if (m.characteristic() != ctx.p) throw InputError("column action characteristic mismatch");
    return act_column(f, poly_matrix_of(m), ctx);
}

Poly act_rows(const Poly& f, const PolyMatrix& m, const RingCtx& ctx) {
    return f.substitute(row_substitution(f, m, ctx));
}

Poly act_rows(const Poly& f, const ScalarMatrix& m, const RingCtx& ctx) {
    if (m.characteristic() != ctx.p) throw InputError("row action characteristic mismatch");
    return act_rows(f, poly_matrix_of(m), ctx);
}

MinorSpec MinorSpec::parse(const std::string& text) {
    std::string s = text;
    auto strip = [&](char c) { s.erase(std::remove(s.begin(), s.end(), c), s.end()); };
    strip('(');
    strip(')');
    std::size_t bar = s.find('|');
    if (bar == std::string::npos) throw InputError("minor spec needs '|': " + text);
    MinorSpec spec;
    auto parse_list = [](const std::string& part) {
        std::vector<int> out;
        std::istringstream in(part);
        int v;
        while (in >> v) out.push_back(v);
        return out;
    };
    spec.rows = parse_list(s.substr(0, bar));
    spec.cols = parse_list(s.substr(bar + 1));
    return spec;
}

std::string MinorSpec::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? " " : "") + std::to_string(rows[i]);
    s += " | ";
    for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? " " : "") + std::to_string(cols[i]);
    return s + ")";
}

Poly poly_det(const PolyMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InputError("determinant of a non-square matrix");
    if (n == 0) throw InputError("determinant of an empty matrix");
    std::uint32_t p = m[0][0].characteristic();
    if (n == 1) return m[0][0];
    Poly result(p);
    // expand along the first row
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Poly term = m[0][j] * poly_det(sub);
        if (j % 2 == 0)
            result += term;
        else
            result -= term;
    }
    return result;
}

Poly poly_pfaffian(const PolyMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InputError("pfaffian of a non-square matrix");
    if (n == 0 || n % 2 != 0) throw InputError("pfaffian needs even size");
    std::uint32_t p = m[0][0].characteristic();
    if (n == 2) return m[0][1];
    Poly result(p);
    for (std::size_t j = 1; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix sub;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == 0 || i == j) continue;
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != 0 && k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Poly term = m[0][j] * poly_pfaffian(sub);
        if (j % 2 == 1)
            result += term;
        else
            result -= term;
    }
    return result;
}

namespace {

void check_strictly_increasing(const std::vector<int>& v, int lo, int hi, const char* what) {
    if (v.empty()) throw InputError(std::string(what) + ": empty index set");
    int prev = lo - 1;
    for (int x : v) {
        if (x <= prev || x < lo || x > hi)
            throw InputError(std::string(what) + ": indices must be strictly increasing within range");
        prev = x;
    }
}

}  // namespace

Poly minor(const MinorSpec& spec, const RingCtx& ctx) {
    if (spec.rows.size() != spec.cols.size()) throw InputError("minor: row/column counts differ");
    check_strictly_increasing(spec.rows, 1, ctx.n, "minor rows");
    check_strictly_increasing(spec.cols, 1, ctx.d, "minor cols");
    std::size_t r = spec.rows.size();
    PolyMatrix sub(r, std::vector<Poly>(r, Poly::zero(ctx.p)));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            sub[a][b] = Poly::variable(VarId::x(spec.rows[a], spec.cols[b]), ctx.p);
    return poly_det(sub);
}

Poly minor_of(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw InputError("minor: row/column counts differ");
    PolyMatrix sub(rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
            sub[a].push_back(m.at(rows[a] - 1).at(cols[b] - 1));
    return poly_det(sub);
}

Poly delta(const RingCtx& ctx) {
    MinorSpec spec;
    for (int i = 1; i <= ctx.n; ++i) {
        spec.rows.push_back(i);
        spec.cols.push_back(i);
    }
    return minor(spec, ctx);
}

ScalarMatrix column_reduce_u(const ScalarMatrix& x) {
    std::size_t n = x.rows(), d = x.cols();
    if (d < n) throw InputError("column reduction needs d >= n");
    std::uint32_t p = x.characteristic();
    ScalarMatrix lead(n, n, p);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) lead.at(i, j) = x.at(i, j);
    if (lead.rank() < n) throw InputError("leading columns are linearly dependent");
    ScalarMatrix u = ScalarMatrix::identity(d, p);
    for (std::size_t j = n + 1; j <= d; ++j) {
        std::vector<Scalar> col;
        col.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) col.push_back(x.at(i, j));
        std::vector<Scalar> c = lead.solve(col);  // x_j = sum c_i x_i
        for (std::size_t i = 1; i <= n; ++i) u.at(i, j) = -c[i - 1];
    }
    return u;
}

ScalarMatrix functional_act(const ScalarMatrix& g, const ScalarMatrix& coeffs) {
    return coeffs * g.transpose();
}

ScalarMatrix pad_functional(const ScalarMatrix& ellPrime, int d) {
    ScalarMatrix out(ellPrime.rows(), d, ellPrime.characteristic());
    for (std::size_t i = 1; i <= ellPrime.rows(); ++i)
        for (std::size_t j = 1; j <= ellPrime.cols(); ++j) out.at(i, j) = ellPrime.at(i, j);
    return out;
}

Poly functional_poly(const ScalarMatrix& coeffs) {
    Poly f(coeffs.characteristic());
    for (std::size_t i = 1; i <= coeffs.rows(); ++i)
        for (std::size_t j = 1; j <= coeffs.cols(); ++j)
            if (!coeffs.at(i, j).is_zero())
                f += Poly::variable(VarId::x(i, j), coeffs.characteristic()) * Poly::constant(coeffs.at(i, j));
    return f;
}

namespace {

// incremental echelon over row vectors; reduce() returns the remainder
struct RowEchelon {
    std::size_t width;
    std::vector<std::vector<Scalar>> rows;

    std::vector<Scalar> reduce(std::vector<Scalar> v) const {
        for (const auto& row : rows) {
            std::size_t pivot = width;
            for (std::size_t j = 0; j < width; ++j)
                if (!row[j].is_zero()) {
                    pivot = j;
                    break;
                }
            if (pivot == width || v[pivot].is_zero()) continue;
            Scalar c = v[pivot] / row[pivot];
            for (std::size_t j = 0; j < width; ++j) v[j] -= c * row[j];
        }
        return v;
    }

    bool add(const std::vector<Scalar>& v) {
        std::vector<Scalar> w = reduce(v);
        for (const auto& s : w)
            if (!s.is_zero()) {
                rows.push_back(std::move(w));
                return true;
            }
        return false;
    }
};

}  // namespace

FunctionalFactorization factor_functional(const ScalarMatrix& ell) {
    std::size_t n = ell.rows(), d = ell.cols();
    std::uint32_t p = ell.characteristic();
    bool zero = true;
    for (std::size_t i = 1; i <= n && zero; ++i)
        for (std::size_t j = 1; j <= d && zero; ++j)
            if (!ell.at(i, j).is_zero()) zero = false;
    if (zero) throw InputError("cannot factor the zero functional");

    auto row_of = [&](std::size_t i) {
        std::vector<Scalar> row;
        row.reserve(d);
        for (std::size_t j = 1; j <= d; ++j) row.push_back(ell.at(i, j));
        return row;
    };

    // greedy maximal independent set of rows, scanned in order
    RowEchelon ech{d, {}};
    std::vector<std::size_t> selected;
    for (std::size_t i = 1; i <= n; ++i)
        if (ech.add(row_of(i))) selected.push_back(i);
    std::size_t r = selected.size();

    // g: selected rows first, completed by standard basis vectors in index order
    ScalarMatrix g(d, d, p);
    std::size_t filled = 0;
    for (std::size_t k = 0; k < r; ++k) {
        ++filled;
        auto row = row_of(selected[k]);
        for (std::size_t j = 1; j <= d; ++j) g.at(filled, j) = row[j - 1];
    }
    for (std::size_t e = 1; e <= d && filled < d; ++e) {
        std::vector<Scalar> v(d, Scalar::zero(p));
        v[e - 1] = Scalar::one(p);
        if (!ech.add(v)) continue;
        ++filled;
        g.at(filled, e) = Scalar::one(p);
    }
    if (filled < d) throw InputError("internal: could not complete to an invertible matrix");

    // coordinates of a dependent row over the selected rows: solve c * sel = row
    ScalarMatrix selT(d, r, p);
    for (std::size_t k = 0; k < r; ++k) {
        auto row = row_of(selected[k]);
        for (std::size_t j = 1; j <= d; ++j) selT.at(j, k + 1) = row[j - 1];
    }
    auto solve_coords = [&](const std::vector<Scalar>& row) {
        ScalarMatrix a(d, r + 1, p);
        for (std::size_t j = 1; j <= d; ++j) {
            for (std::size_t k = 1; k <= r; ++k) a.at(j, k) = selT.at(j, k);
            a.at(j, r + 1) = row[j - 1];
        }
        std::size_t rrow = 1;
        std::vector<std::size_t> pivot_col;
        for (std::size_t col = 1; col <= r && rrow <= d; ++col) {
            std::size_t piv = 0;
            for (std::size_t rr = rrow; rr <= d; ++rr)
                if (!a.at(rr, col).is_zero()) {
                    piv = rr;
                    break;
                }
            if (piv == 0) continue;
            if (piv != rrow)
                for (std::size_t cc = 1; cc <= r + 1; ++cc) std::swap(a.at(piv, cc), a.at(rrow, cc));
            Scalar inv = a.at(rrow, col).inverse();
            for (std::size_t cc = 1; cc <= r + 1; ++cc) a.at(rrow, cc) *= inv;
            for (std::size_t rr = 1; rr <= d; ++rr) {
                if (rr == rrow || a.at(rr, col).is_zero()) continue;
                Scalar c = a.at(rr, col);
                for (std::size_t cc = 1; cc <= r + 1; ++cc) a.at(rr, cc) -= c * a.at(rrow, cc);
            }
            pivot_col.push_back(col);
            ++rrow;
        }
        std::vector<Scalar> c(r, Scalar::zero(p));
        for (std::size_t k = 0; k < pivot_col.size(); ++k) c[pivot_col[k] - 1] = a.at(k + 1, r + 1);
        return c;
    };

    ScalarMatrix ellPrime(n, n, p);
    for (std::size_t i = 1; i <= n; ++i) {
        auto sel_it = std::find(selected.begin(), selected.end(), i);
        if (sel_it != selected.end()) {
            std::size_t k = static_cast<std::size_t>(sel_it - selected.begin());
            ellPrime.at(i, k + 1) = Scalar::one(p);
        } else {
            std::vector<Scalar> c = solve_coords(row_of(i));
            for (std::size_t k = 0; k < r; ++k) ellPrime.at(i, k + 1) = c[k];
        }
    }
    return {g, ellPrime};
}

std::vector<std::vector<int>> increasing_subsets(int m, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= m; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    if (r >= 0 && r <= m) rec(1);
    return out;
}

std::vector<Poly> u_invariant_generators(const RingCtx& ctx) {
    std::vector<Poly> out;
    for (int r = 1; r <= ctx.n; ++r) {
        std::vector<int> cols;
        for (int c = 1; c <= r; ++c) cols.push_back(c);
        for (const auto& rows : increasing_subsets(ctx.n, r)) {
            MinorSpec spec{rows, cols};
            out.push_back(minor(spec, ctx));
        }
    }
    return out;
}

BiTableau BiTableau::from_json(const nlohmann::json& j) {
    BiTableau bt;
    bt.D = j.at("D").get<std::vector<std::vector<int>>>();
    bt.E = j.at("E").get<std::vector<std::vector<int>>>();
    bt.check_shape();
    return bt;
}

nlohmann::json BiTableau::to_json() const { return {{"D", D}, {"E", E}}; }

void BiTableau::check_shape() const {
    if (D.size() != E.size()) throw InputError("bitableau sides have different row counts");
    std::size_t prev = SIZE_MAX;
    for (std::size_t r = 0; r < D.size(); ++r) {
        if (D[r].size() != E[r].size()) throw InputError("bitableau row lengths differ across sides");
        if (D[r].empty()) throw InputError("bitableau has an empty row");
        if (D[r].size() > prev) throw InputError("bitableau row lengths must weakly decrease");
        prev = D[r].size();
    }
}

namespace {

bool tableau_standard(const std::vector<std::vector<int>>& t) {
    for (const auto& row : t)
        for (std::size_t c = 1; c < row.size(); ++c)
            if (row[c] <= row[c - 1]) return false;
    for (std::size_t r = 1; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c)
            if (t[r][c] < t[r - 1][c]) return false;
    return true;
}

}  // namespace

bool is_standard(const BiTableau& bt) {
    bt.check_shape();
    return tableau_standard(bt.D) && tableau_standard(bt.E);
}

Poly bitableau_poly(const BiTableau& bt, const RingCtx& ctx) {
    bt.check_shape();
    Poly result = Poly::constant(1, ctx.p);
    for (std::size_t r = 0; r < bt.D.size(); ++r) {
        MinorSpec spec{bt.D[r], bt.E[r]};
        result = result * minor(spec, ctx);
    }
    return result;
}

}  // namespace vilab
