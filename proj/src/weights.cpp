#include "vilab/weights.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace vilab {

GLWeight GLWeight::of_monomial(const Monomial& m, int d) {
    GLWeight w;
    w.e.assign(d, 0);
    for (const auto& [k, exp] : m.factors()) {
        VarId v = VarId::from_key(k);
        if (v.family != Family::X) throw InputError("weights are defined on matrix variables only");
        if (static_cast<int>(v.j) > d) throw InputError("variable column outside the ring");
        w.e[v.j - 1] += exp;
    }
    return w;
}

std::vector<int> GLWeight::fundamental_multiplicities() const {
    if (!is_dominant() || (!e.empty() && e.back() < 0))
        throw InputError("fundamental multiplicities need a dominant polynomial weight");
    std::vector<int> mults(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        long long next = i + 1 < e.size() ? e[i + 1] : 0;
        mults[i] = static_cast<int>(e[i] - next);
    }
    return mults;
}

GLWeight GLWeight::operator+(const GLWeight& o) const {
    if (e.size() != o.e.size()) throw InputError("weight length mismatch");
    GLWeight w = *this;
    for (std::size_t i = 0; i < e.size(); ++i) w.e[i] += o.e[i];
    return w;
}

bool GLWeight::is_dominant() const {
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i - 1] < e[i]) return false;
    return true;
}

std::string GLWeight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

long long h_value(const GLWeight& w) {
    long long d = static_cast<long long>(w.e.size());
    long long h = 0;
    for (long long i = 1; i <= d; ++i) h += (d + 1 - 2 * i) * w.e[i - 1];
    return h;
}

std::map<GLWeight, Poly> t_weight_decompose(const Poly& f, const RingCtx& ctx) {
    if (!f.uses_only_family(Family::X))
        throw InputError("weight decomposition expects matrix variables only");
    check_in_ring(f, ctx);
    std::map<GLWeight, Poly> parts;
    for (const auto& [m, c] : f.terms()) {
        GLWeight w = GLWeight::of_monomial(m, ctx.d);
        auto [it, fresh] = parts.try_emplace(w, ctx.p);
        it->second += Poly::term(m, c);
    }
    return parts;
}

long long filtration_level(const Poly& f, const RingCtx& ctx) {
    if (f.is_zero()) throw InputError("filtration level of zero");
    bool first = true;
    long long level = 0;
    for (const auto& [deg, part] : f.homogeneous_parts()) {
        ModuleSpan span = module_span(part, ctx);
        for (const auto& b : span.elements)
            for (const auto& [m, c] : b.terms()) {
                long long h = h_value(GLWeight::of_monomial(m, ctx.d));
                if (first || h > level) {
                    level = h;
                    first = false;
                }
            }
    }
    return level;
}

Poly phi_leading(const Poly& f, const RingCtx& ctx) {
    long long level = filtration_level(f, ctx);
    Poly out(ctx.p);
    for (const auto& [w, part] : t_weight_decompose(f, ctx))
        if (h_value(w) == level) out += part;
    return out;
}

Poly HullElement::expand(std::uint32_t p) const {
    Poly total(p);
    for (const auto& t : terms) total += t.u * t.g;
    return total;
}

nlohmann::json HullElement::to_json() const {
    nlohmann::json j;
    j["level"] = level;
    j["degree"] = degree;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : terms)
        j["terms"].push_back({{"omega", t.omega.e}, {"u", t.u.str()}, {"g", t.g.str()}});
    return j;
}

HullElement phi_prime(const Poly& f, const RingCtx& ctx) {
    if (f.is_zero()) throw InputError("hull image of zero");
    if (!f.is_homogeneous()) throw InputError("hull image needs a homogeneous polynomial");
    long long level = filtration_level(f, ctx);

    Poly expanded = act_column(f, generic_group_matrix(ctx.d, ctx.p), ctx);

    // keep the X-weight components at the filtration level, grouped weight by
    // weight and G-monomial by G-monomial (the substitution matches X-column
    // degrees with G-row degrees, so each group pairs consistently)
    struct WgLess {
        bool operator()(const std::pair<GLWeight, Monomial>& a,
                        const std::pair<GLWeight, Monomial>& b) const {
            if (!(a.first == b.first)) return a.first < b.first;
            return a.second.less_than(b.second);
        }
    };
    std::map<std::pair<GLWeight, Monomial>, Poly, WgLess> by_wg;
    for (const auto& [m, c] : expanded.terms()) {
        auto [gpart, xpart] = m.split_family(Family::G);
        GLWeight w = GLWeight::of_monomial(xpart, ctx.d);
        if (h_value(w) != level) continue;
        auto [it, fresh] = by_wg.try_emplace(std::make_pair(w, gpart), ctx.p);
        it->second += Poly::term(xpart, c);
    }

    // merge G-monomials sharing the same weight-pure X-part up to scale
    std::map<std::pair<std::vector<long long>, std::string>, HullElement::Term> grouped;
    for (const auto& [key, coeff] : by_wg) {
        if (coeff.is_zero()) continue;
        const auto& [w, g] = key;
        Scalar lead = coeff.leading_coefficient();
        Poly monic = coeff.monic();
        auto [it, fresh] = grouped.try_emplace(std::make_pair(w.e, monic.str()));
        if (fresh) {
            it->second.omega = w;
            it->second.u = monic;
            it->second.g = Poly(ctx.p);
        }
        it->second.g += Poly::term(g, lead);
    }

    HullElement out;
    out.level = level;
    out.degree = f.total_degree();
    for (auto& [key, term] : grouped) out.terms.push_back(std::move(term));
    // larger row parts first, deterministically
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        return b.u.leading_monomial().less_than(a.u.leading_monomial());
    });
    return out;
}

namespace {

// shapes as row lengths, weakly decreasing
std::vector<int> shape_of(const std::vector<int>& mults) {
    std::vector<int> shape;
    for (int r = static_cast<int>(mults.size()); r >= 1; --r) {
        if (mults[r - 1] < 0) throw InputError("negative weight multiplicity");
        for (int k = 0; k < mults[r - 1]; ++k) shape.push_back(r);
    }
    return shape;
}

// fillings with strictly increasing rows and weakly increasing columns
void standard_fillings(const std::vector<int>& shape, int d, std::size_t row,
                       std::vector<std::vector<int>>& current,
                       const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (row == shape.size()) {
        emit(current);
        return;
    }
    for (const auto& candidate : increasing_subsets(d, shape[row])) {
        if (row > 0) {
            bool ok = true;
            for (std::size_t c = 0; c < candidate.size(); ++c)
                if (candidate[c] < current[row - 1][c]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
        }
        current.push_back(candidate);
        standard_fillings(shape, d, row + 1, current, emit);
        current.pop_back();
    }
}

}  // namespace

std::vector<Poly> y_prime_basis(const std::vector<int>& mults, int d, std::uint32_t p) {
    if (static_cast<int>(mults.size()) > d) throw InputError("multiplicity vector longer than d");
    std::vector<int> shape = shape_of(mults);
    std::vector<Poly> out;
    if (shape.empty()) {
        out.push_back(Poly::constant(1, p));
        return out;
    }
    PolyMatrix g = generic_group_matrix(d, p);
    std::vector<std::vector<int>> current;
    standard_fillings(shape, d, 0, current, [&](const std::vector<std::vector<int>>& rows) {
        Poly prod = Poly::constant(1, p);
        for (const auto& cols : rows) {
            std::vector<int> left;
            for (int i = 1; i <= static_cast<int>(cols.size()); ++i) left.push_back(i);
            prod = prod * minor_of(g, left, cols);
        }
        out.push_back(prod);
    });
    return out;
}

std::uint64_t semistandard_count_conjugate(const std::vector<int>& mults, int d) {
    // conjugate shape: column lengths of the original become row lengths
    std::vector<int> shape = shape_of(mults);
    if (shape.empty()) return 1;
    std::vector<int> conj;
    for (int c = 1; c <= shape[0]; ++c) {
        int len = 0;
        for (int rowlen : shape)
            if (rowlen >= c) ++len;
        conj.push_back(len);
    }
    // count fillings with weakly increasing rows, strictly increasing columns
    std::uint64_t count = 0;
    std::vector<std::vector<int>> rows;
    std::function<void(std::size_t)> rec = [&](std::size_t row) {
        if (row == conj.size()) {
            ++count;
            return;
        }
        int len = conj[row];
        std::vector<int> current(len, 0);
        std::function<void(int)> fill = [&](int pos) {
            if (pos == len) {
                rows.push_back(current);
                rec(row + 1);
                rows.pop_back();
                return;
            }
            int lo = pos > 0 ? current[pos - 1] : 1;  // weakly increasing row
            for (int v = lo; v <= d; ++v) {
                if (row > 0 && pos < static_cast<int>(rows[row - 1].size()) && v <= rows[row - 1][pos])
                    continue;  // strictly increasing column
                current[pos] = v;
                fill(pos + 1);
            }
        };
        fill(0);
    };
    rec(0);
    return count;
}

bool product_rule_check(const std::vector<int>& w1, const std::vector<int>& w2, int d,
                        std::uint32_t p, std::size_t dim_cap) {
    std::vector<int> sum(d, 0);
    for (int i = 0; i < d; ++i) {
        int a = i < static_cast<int>(w1.size()) ? w1[i] : 0;
        int b = i < static_cast<int>(w2.size()) ? w2[i] : 0;
        sum[i] = a + b;
    }
    std::vector<Poly> left = y_prime_basis(w1, d, p);
    std::vector<Poly> right = y_prime_basis(w2, d, p);
    std::vector<Poly> target = y_prime_basis(sum, d, p);
    if (left.size() * right.size() > dim_cap) throw CapExceeded("product rule dimension cap");

    SpanBasis products(p);
    for (const auto& a : left)
        for (const auto& b : right) products.insert(a * b);
    SpanBasis targets(p);
    for (const auto& t : target) targets.insert(t);
    if (products.dim() != targets.dim()) return false;
    for (const auto& t : target)
        if (!products.contains(t)) return false;
    for (const auto& row : products.row_polys())
        if (!targets.contains(row)) return false;
    return true;
}

nlohmann::json CoverageRecord::to_json() const {
    nlohmann::json j;
    j["pair"] = pair;
    j["weight"] = weight;
    j["covered"] = covered;
    j["degree"] = degree;
    if (indeterminate) j["indeterminate"] = true;
    if (!note.empty()) j["note"] = note;
    return j;
}

std::vector<CoverageRecord> check_hull_coverage(const std::vector<CoveragePair>& uGens,
                                                const std::vector<Poly>& algGens,
                                                const RingCtx& ctx, const Caps& caps) {
    PolarizedAlgebra alg(algGens, ctx, caps);
    std::vector<CoverageRecord> out;
    for (const auto& pair : uGens) {
        CoverageRecord rec;
        rec.pair = pair.label.empty() ? pair.a.str() : pair.label;
        rec.weight = pair.omega.e;
        rec.degree = pair.a.total_degree();
        if (static_cast<int>(rec.degree) > caps.coverageDegreeCap) {
            rec.indeterminate = true;
            rec.note = "degree above coverage cap";
            out.push_back(rec);
            continue;
        }
        try {
            std::vector<Poly> rows = alg.component(rec.degree).row_polys();
            // The hull images of a plain basis can miss low filtration
            // classes (the leading-term map is not linear across levels).
            // Build instead, for every level m, a basis of the subspace
            // V_m = {v : no orbit-span weight exceeds h-level m}, which is
            // the kernel of a linear map; images of all V_m bases span the
            // full graded image.
            std::size_t k = rows.size();
            PolyMatrix generic = generic_group_matrix(ctx.d, ctx.p);
            std::vector<std::map<long long, Poly>> parts_by_level(k);
            std::set<long long> levels;
            for (std::size_t i = 0; i < k; ++i) {
                Poly expanded = act_column(rows[i], generic, ctx);
                for (const auto& [m, c] : expanded.terms()) {
                    auto [gpart, xpart] = m.split_family(Family::G);
                    long long lvl = h_value(GLWeight::of_monomial(xpart, ctx.d));
                    auto [it, fresh] = parts_by_level[i].try_emplace(lvl, ctx.p);
                    it->second += Poly::term(m, c);
                    levels.insert(lvl);
                }
            }

            SpanBasis images(ctx.p);
            for (long long m : levels) {
                // constraints: the parts above level m must cancel
                std::vector<Poly> high(k, Poly(ctx.p));
                std::map<Monomial, std::size_t, MonomialLess> mono_index;
                for (std::size_t i = 0; i < k; ++i)
                    for (const auto& [lvl, part] : parts_by_level[i])
                        if (lvl > m) {
                            high[i] += part;
                            for (const auto& [mm, c] : part.terms()) mono_index.emplace(mm, 0);
                        }
                std::size_t row_count = 0;
                for (auto& [mm, idx] : mono_index) idx = row_count++;
                ScalarMatrix constraints(std::max<std::size_t>(row_count, 1), k, ctx.p);
                for (std::size_t i = 0; i < k; ++i)
                    for (const auto& [mm, c] : high[i].terms())
                        constraints.at(mono_index.at(mm) + 1, i + 1) = c;
                for (const auto& coords : constraints.null_space()) {
                    Poly v(ctx.p);
                    for (std::size_t i = 0; i < k; ++i) v += rows[i] * coords[i];
                    if (!v.is_zero()) images.insert(phi_prime(v, ctx).expand(ctx.p));
                }
            }

            bool all = true;
            for (const auto& y : y_prime_basis(pair.omega.fundamental_multiplicities(), ctx.d, ctx.p)) {
                if (!images.contains(pair.a * y)) {
                    all = false;
                    break;
                }
            }
            rec.covered = all;
        } catch (const CapExceeded& e) {
            rec.indeterminate = true;
            rec.note = e.what();
        }
        out.push_back(rec);
    }
    return out;
}

}  // namespace vilab
