#include "vilab/monomial.hpp"

#include <algorithm>

namespace vilab {

std::string VarId::str() const {
    switch (family) {
        case Family::X: return "x(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Family::G: return "g(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Family::T: return "t(" + std::to_string(i) + ")";
    }
    return "?";
}

Monomial Monomial::var(VarId v, std::uint32_t e) {
    Monomial m;
    if (e > 0) m.f_.push_back({v.key(), e});
    return m;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [k, e] : f_) d += e;
    return d;
}

std::uint32_t Monomial::exponent(std::uint32_t key) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), key,
                               [](const Factor& a, std::uint32_t k) { return a.first < k; });
    return (it != f_.end() && it->first == key) ? it->second : 0;
}

std::uint64_t Monomial::degree_in_family(Family fam) const {
    std::uint64_t d = 0;
    for (const auto& [k, e] : f_)
        if (VarId::from_key(k).family == fam) d += e;
    return d;
}

std::uint64_t Monomial::degree_in_column(Family fam, std::uint32_t col) const {
    std::uint64_t d = 0;
    for (const auto& [k, e] : f_) {
        VarId v = VarId::from_key(k);
        if (v.family == fam && v.j == col) d += e;
    }
    return d;
}

std::uint64_t Monomial::degree_in_row(Family fam, std::uint32_t row) const {
    std::uint64_t d = 0;
    for (const auto& [k, e] : f_) {
        VarId v = VarId::from_key(k);
        if (v.family == fam && v.i == row) d += e;
    }
    return d;
}

std::pair<Monomial, Monomial> Monomial::split_family(Family fam) const {
    Monomial in, out;
    for (const auto& fe : f_) {
        if (VarId::from_key(fe.first).family == fam)
            in.f_.push_back(fe);
        else
            out.f_.push_back(fe);
    }
    return {in, out};
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() && b != o.f_.end()) {
        if (a->first < b->first)
            r.f_.push_back(*a++);
        else if (b->first < a->first)
            r.f_.push_back(*b++);
        else {
            r.f_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    r.f_.insert(r.f_.end(), a, f_.end());
    r.f_.insert(r.f_.end(), b, o.f_.end());
    return r;
}

Monomial Monomial::pow(std::uint32_t e) const {
    Monomial r;
    if (e == 0) return r;
    r.f_ = f_;
    for (auto& fe : r.f_) fe.second *= e;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [k, e] : f_)
        if (o.exponent(k) < e) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
    if (!divides(numerator)) throw InputError("monomial quotient is not exact");
    Monomial r;
    for (const auto& [k, e] : numerator.f_) {
        std::uint32_t q = e - exponent(k);
        if (q > 0) r.f_.push_back({k, q});
    }
    return r;
}

bool Monomial::less_than(const Monomial& o) const {
    std::uint64_t da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() && b != o.f_.end()) {
        if (a->first != b->first) {
            // smaller key present only on one side: that side has the higher
            // exponent on the earlier variable, hence is the larger monomial
            return a->first > b->first;
        }
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return a == f_.end() && b != o.f_.end() ? false : (b == o.f_.end() && a != f_.end() ? true : false);
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [k, e] : f_) {
        h = (h ^ k) * 1099511628211ull;
        h = (h ^ e) * 1099511628211ull;
    }
    return h;
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::string s;
    for (const auto& [k, e] : f_) {
        if (!s.empty()) s += "*";
        s += VarId::from_key(k).str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace vilab
