#include "qi/parse.hpp"

#include <cctype>

namespace qi {
namespace {

template <class C>
class Parser {
  public:
    Parser(const std::string& text, const Ring& ring) : s_(text), ring_(ring) {}

    Poly<C> run() {
        auto p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly<C> expr() {
        bool neg = false;
        skip_ws();
        if (accept('-')) neg = true;
        else accept('+');
        Poly<C> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    Poly<C> term() {
        Poly<C> acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Poly<C> factor() {
        Poly<C> base = atom();
        if (!accept('^')) return base;
        skip_ws();
        size_t at = pos_;
        bool neg = accept('-');
        long e = integer_literal();
        if (neg) {
            if (!ring_.laurent) throw ParseError("negative exponent outside a Laurent ring", at);
            if (base.term_count() != 1 || base.leading_coefficient() != C(1))
                throw ParseError("negative exponent requires a monomial base", at);
            Monomial m = base.leading_monomial();
            for (int& x : m.e) x *= static_cast<int>(-e);
            return Poly<C>(ring_, m, C(1));
        }
        return base.pow(static_cast<int>(e));
    }

    Poly<C> atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail("unexpected character");
    }

    long integer_literal() {
        skip_ws();
        size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) throw ParseError("exponent too large", at);
            ++pos_;
        }
        return v;
    }

    std::string digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            d.push_back(s_[pos_++]);
        return d;
    }

    Poly<C> number() {
        size_t at = pos_;
        std::string num = digits();
        if (peek('/')) {
            ++pos_;
            skip_ws();
            std::string den = digits();
            if (den.empty()) fail("expected denominator");
            return rational_literal(num, den, at);
        }
        return Poly<C>(ring_, C(num.c_str()));
    }

    Poly<C> rational_literal(const std::string& num, const std::string& den, size_t at);

    Poly<C> variable() {
        size_t at = pos_;
        std::string name;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_]))
                                    || s_[pos_] == '_'))
            name.push_back(s_[pos_++]);
        int idx = ring_.var_index(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
        return Poly<C>::variable(ring_, idx);
    }

    const std::string& s_;
    const Ring& ring_;
    size_t pos_ = 0;
};

template <>
Poly<Rational> Parser<Rational>::rational_literal(const std::string& num, const std::string& den,
                                                  size_t at) {
    Integer d(den.c_str());
    if (d == 0) throw ParseError("zero denominator", at);
    return Poly<Rational>(ring_, make_rational(Integer(num.c_str()), d));
}

template <>
Poly<Integer> Parser<Integer>::rational_literal(const std::string&, const std::string&,
                                                size_t at) {
    throw ParseError("rational literal in an integer-coefficient ring", at);
}

}  // namespace

Polynomial parse_poly(const std::string& text, const Ring& ring) {
    return Parser<Rational>(text, ring).run();
}

LaurentPolynomial parse_laurent(const std::string& text, const Ring& ring) {
    if (!ring.laurent) throw std::invalid_argument("parse_laurent needs a Laurent ring");
    return Parser<Integer>(text, ring).run();
}

}  // namespace qi
