#include "vilab/parse.hpp"

#include <cctype>

namespace vilab {

RingCtx::RingCtx(int n_, int d_, std::uint32_t p_) : n(n_), d(d_), p(p_) {
    if (n < 1 || d < n) throw InputError("ring requires 1 <= n <= d");
    if (p != 0 && !is_prime(p)) throw InputError("ring characteristic must be 0 or prime");
}

RingCtx RingCtx::parse(const std::string& text) {
    std::size_t x = text.find('x');
    std::size_t at = text.find("@p");
    if (x == std::string::npos || at == std::string::npos || x == 0 || at < x + 2)
        throw InputError("ring spec must look like NxD@pP, got '" + text + "'");
    try {
        int n = std::stoi(text.substr(0, x));
        int d = std::stoi(text.substr(x + 1, at - x - 1));
        long p = std::stol(text.substr(at + 2));
        if (p < 0) throw InputError("negative characteristic");
        return RingCtx(n, d, static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument&) {
        throw InputError("ring spec must look like NxD@pP, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw InputError("ring spec numbers out of range in '" + text + "'");
    }
}

std::string RingCtx::str() const {
    return std::to_string(n) + "x" + std::to_string(d) + "@p" + std::to_string(p);
}

namespace {

class PolyLexer {
public:
    PolyLexer(const std::string& text, std::uint32_t p) : text_(text), p_(p) {}

    Poly parse() {
        skip_ws();
        Poly result(p_);
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            get();
        } else if (peek() == '+') {
            get();
        }
        result += parse_term(negative);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = get();
            if (c == '+')
                result += parse_term(false);
            else if (c == '-')
                result += parse_term(true);
            else
                fail(std::string("expected '+' or '-', got '") + c + "'");
            skip_ws();
        }
        return result;
    }

private:
    Poly parse_term(bool negative) {
        skip_ws();
        BigInt num = 1, den = 1;
        Monomial mono;
        auto read_coeff = [&]() {
            num *= parse_integer();
            skip_ws();
            // 'a/b' extends the integer grammar so printed characteristic-0
            // polynomials round-trip
            if (peek() == '/') {
                get();
                skip_ws();
                BigInt b = parse_integer();
                if (b == 0) fail("zero denominator");
                den *= b;
            }
        };
        if (std::isdigit(peek())) {
            read_coeff();
        } else {
            mono = mono * parse_factor();
        }
        skip_ws();
        while (peek() == '*') {
            get();
            skip_ws();
            if (std::isdigit(peek()))
                read_coeff();
            else
                mono = mono * parse_factor();
            skip_ws();
        }
        if (negative) num = -num;
        Scalar c = den == 1 ? Scalar::of(num, p_)
                            : (p_ == 0 ? Scalar::rational(BigRational(num, den))
                                       : Scalar::of(num, p_) * Scalar::of(den, p_).inverse());
        return Poly::term(mono, c);
    }

    Monomial parse_factor() {
        VarId v = parse_var();
        skip_ws();
        std::uint32_t e = 1;
        if (peek() == '^') {
            get();
            skip_ws();
            BigInt be = parse_integer();
            if (be < 0 || be > 1000000) fail("exponent out of range");
            e = be.convert_to<std::uint32_t>();
        }
        return Monomial::var(v, e);
    }

    VarId parse_var() {
        skip_ws();
        char fam = get();
        if (fam != 'x' && fam != 'g' && fam != 't') fail("expected a variable (x/g/t)");
        expect('(');
        BigInt a = parse_integer();
        if (a < 1 || a > 16000) fail("variable index out of range");
        if (fam == 't') {
            expect(')');
            return VarId::t(a.convert_to<std::uint32_t>());
        }
        expect(',');
        BigInt b = parse_integer();
        if (b < 1 || b > 16000) fail("variable index out of range");
        expect(')');
        auto ai = a.convert_to<std::uint32_t>(), bi = b.convert_to<std::uint32_t>();
        return fam == 'x' ? VarId::x(ai, bi) : VarId::g(ai, bi);
    }

    BigInt parse_integer() {
        skip_ws();
        if (!std::isdigit(peek())) fail("expected an integer");
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (get() - '0');
        }
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char get() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) get();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at line " + std::to_string(line_) + ", column " +
                         std::to_string(col_) + ": " + msg);
    }

    const std::string& text_;
    std::uint32_t p_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

Poly parse_poly(const std::string& text, std::uint32_t p) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InputError("parse error: empty polynomial text");
    if (text.substr(first, 1) == "0" && text.find_first_not_of(" \t\r\n", first + 1) == std::string::npos)
        return Poly::zero(p);
    return PolyLexer(text, p).parse();
}

void check_in_ring(const Poly& f, const RingCtx& ctx) {
    if (f.characteristic() != ctx.p)
        throw InputError("polynomial characteristic " + std::to_string(f.characteristic()) +
                         " does not match ring " + ctx.str());
    for (auto key : f.variable_keys()) {
        VarId v = VarId::from_key(key);
        if (v.family != Family::X) continue;
        if (static_cast<int>(v.i) > ctx.n || static_cast<int>(v.j) > ctx.d)
            throw InputError("variable " + v.str() + " outside ring " + ctx.str());
    }
}

}  // namespace vilab
