#include "vilab/poly.hpp"

#include <algorithm>

namespace vilab {

namespace {
struct TermLess {
    // descending canonical order
    bool operator()(const Poly::Term& a, const Poly::Term& b) const {
        return b.first.less_than(a.first);
    }
};
}  // namespace

Poly Poly::constant(const Scalar& c) {
    Poly f(c.characteristic());
    if (!c.is_zero()) f.terms_.push_back({Monomial(), c});
    return f;
}

Poly Poly::variable(VarId v, std::uint32_t p) {
    Poly f(p);
    f.terms_.push_back({Monomial::var(v), Scalar::one(p)});
    return f;
}

Poly Poly::term(const Monomial& m, const Scalar& c) {
    Poly f(c.characteristic());
    if (!c.is_zero()) f.terms_.push_back({m, c});
    return f;
}

Poly Poly::from_terms(std::vector<Term> terms, std::uint32_t p) {
    std::sort(terms.begin(), terms.end(), TermLess{});
    Poly f(p);
    for (auto& t : terms) {
        if (t.second.characteristic() != p) throw InputError("term characteristic mismatch");
        if (!f.terms_.empty() && f.terms_.back().first == t.first)
            f.terms_.back().second += t.second;
        else
            f.terms_.push_back(std::move(t));
        if (!f.terms_.empty() && f.terms_.back().second.is_zero()) f.terms_.pop_back();
    }
    return f;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw InputError("leading monomial of zero");
    return terms_.front().first;
}

const Scalar& Poly::leading_coefficient() const {
    if (terms_.empty()) throw InputError("leading coefficient of zero");
    return terms_.front().second;
}

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_.front().first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

std::map<std::uint64_t, Poly> Poly::homogeneous_parts() const {
    std::map<std::uint64_t, Poly> parts;
    for (const auto& t : terms_) {
        auto [it, fresh] = parts.try_emplace(t.first.total_degree(), p_);
        it->second.terms_.push_back(t);
    }
    return parts;  // term order within parts stays descending
}

bool Poly::uses_only_family(Family fam) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [k, e] : m.factors())
            if (VarId::from_key(k).family != fam) return false;
    return true;
}

std::vector<std::uint32_t> Poly::variable_keys() const {
    std::vector<std::uint32_t> keys;
    for (const auto& [m, c] : terms_)
        for (const auto& [k, e] : m.factors()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

void Poly::check_char(const Poly& o) const {
    if (p_ != o.p_)
        throw InputError("polynomial characteristic mismatch: " + std::to_string(p_) + " vs " +
                         std::to_string(o.p_));
}

Poly Poly::operator-() const {
    Poly r(p_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.push_back({m, -c});
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_char(o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() && b != o.terms_.cend()) {
        if (a->first == b->first) {
            Scalar c = a->second + b->second;
            if (!c.is_zero()) merged.push_back({a->first, c});
            ++a;
            ++b;
        } else if (b->first.less_than(a->first)) {
            merged.push_back(*a++);
        } else {
            merged.push_back(*b++);
        }
    }
    merged.insert(merged.end(), a, terms_.cend());
    merged.insert(merged.end(), b, o.terms_.cend());
    terms_ = std::move(merged);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator*(const Poly& o) const {
    check_char(o);
    std::map<Monomial, Scalar, MonomialLess> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            auto [it, fresh] = acc.try_emplace(m, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    Poly r(p_);
    r.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    if (c.characteristic() != p_) throw InputError("scalar characteristic mismatch");
    Poly r(p_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, cc] : terms_) r.terms_.push_back({m, cc * c});
    return r;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return *this * leading_coefficient().inverse();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        if (negative) cs = cs.substr(1);
        if (m.is_constant()) {
            s += cs;
        } else if (cs == "1") {
            s += m.str();
        } else {
            s += cs + "*" + m.str();
        }
    }
    return s;
}

Poly poly_pow(const Poly& f, std::uint64_t e) {
    Poly result = Poly::constant(1, f.characteristic());
    Poly base = f;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly Poly::substitute(const std::map<std::uint32_t, Poly>& sigma) const {
    for (const auto& [k, g] : sigma)
        if (g.characteristic() != p_)
            throw InputError("substitution characteristic mismatch for " + VarId::from_key(k).str());
    // memoized powers of the replacement polynomials
    std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> powers;
    auto power_of = [&](std::uint32_t key, std::uint32_t e) -> const Poly& {
        auto it = powers.find({key, e});
        if (it != powers.end()) return it->second;
        const Poly& base = sigma.at(key);
        return powers.emplace(std::make_pair(key, e), poly_pow(base, e)).first->second;
    };
    Poly result(p_);
    for (const auto& [m, c] : terms_) {
        Poly piece = Poly::constant(c);
        Monomial untouched;
        for (const auto& [k, e] : m.factors()) {
            if (sigma.count(k))
                piece = piece * power_of(k, e);
            else
                untouched = untouched * Monomial::var(VarId::from_key(k), e);
        }
        if (!untouched.is_constant()) piece = piece * Poly::term(untouched, Scalar::one(p_));
        result += piece;
    }
    return result;
}

Scalar Poly::evaluate(const std::map<std::uint32_t, Scalar>& point) const {
    Scalar total = Scalar::zero(p_);
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (const auto& [k, e] : m.factors()) {
            auto it = point.find(k);
            if (it == point.end())
                throw InputError("evaluation point does not assign " + VarId::from_key(k).str());
            Scalar pw = Scalar::one(p_);
            for (std::uint32_t q = 0; q < e; ++q) pw *= it->second;
            v *= pw;
        }
        total += v;
    }
    return total;
}

Poly poly_substitute(const Poly& f, const std::map<std::uint32_t, Poly>& sigma) {
    return f.substitute(sigma);
}

}  // namespace vilab
