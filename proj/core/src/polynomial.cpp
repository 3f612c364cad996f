#include "qi/polynomial.hpp"

namespace qi {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial m(nvars);
    // Within a fixed degree, ascending graded-lex equals ascending
    // lexicographic on exponent vectors; the recursion emits exactly that.
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            m.e[var] = rem;
            out.push_back(m);
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            m.e[var] = k;
            self(self, var + 1, rem - k);
        }
        m.e[var] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (!(f.ring() == g.ring())) throw std::invalid_argument("ring mismatch");
    Polynomial q(f.ring()), r(f.ring());
    Polynomial rest = f;
    const Monomial& lg = g.leading_monomial();
    const Rational& cg = g.leading_coefficient();
    while (!rest.is_zero()) {
        const Monomial& lm = rest.leading_monomial();
        if (lg.divides(lm)) {
            Monomial mq = lm / lg;
            Rational cq = rest.leading_coefficient() / cg;
            Polynomial t(f.ring(), mq, cq);
            q += t;
            rest -= t * g;
        } else {
            Polynomial t(f.ring(), lm, rest.leading_coefficient());
            r += t;
            rest -= t;
        }
    }
    return {q, r};
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (!(f.ring() == g.ring())) throw std::invalid_argument("ring mismatch");
    Polynomial q(f.ring());
    Polynomial rest = f;
    const Monomial& lg = g.leading_monomial();
    const Rational& cg = g.leading_coefficient();
    while (!rest.is_zero()) {
        const Monomial& lm = rest.leading_monomial();
        if (!lg.divides(lm)) return std::nullopt;
        Monomial mq = lm / lg;
        Rational cq = rest.leading_coefficient() / cg;
        Polynomial t(f.ring(), mq, cq);
        q += t;
        rest -= t * g;
    }
    return q;
}

Polynomial to_rational_poly(const LaurentPolynomial& f, const Ring& target) {
    Polynomial r(target);
    for (auto& [m, c] : f.terms()) r.add_term(m, Rational(c));
    return r;
}

std::optional<LaurentPolynomial> to_integer_poly(const Polynomial& f, const Ring& target) {
    LaurentPolynomial r(target);
    for (auto& [m, c] : f.terms()) {
        if (!is_integer(c)) return std::nullopt;
        r.add_term(m, c.get_num());
    }
    return r;
}

std::optional<LaurentPolynomial> laurent_divide_exact(const LaurentPolynomial& f,
                                                      const LaurentPolynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (!(f.ring() == g.ring())) throw std::invalid_argument("ring mismatch");
    if (f.is_zero()) return LaurentPolynomial(f.ring());
    const int n = f.ring().nvars();

    // Strip the monomial content z^alpha from each operand so both sides
    // become honest polynomials with per-variable minimum exponent 0. After
    // that, f0/g0 lies in the Laurent ring iff g0 divides f0 as polynomials.
    auto min_exps = [n](const LaurentPolynomial& p) {
        std::vector<int> mins(n, 0);
        bool first = true;
        for (auto& [m, c] : p.terms()) {
            for (int i = 0; i < n; ++i) mins[i] = first ? m.e[i] : std::min(mins[i], m.e[i]);
            first = false;
        }
        return mins;
    };
    std::vector<int> alpha = min_exps(f), beta = min_exps(g);

    Ring plain = f.ring();
    plain.laurent = false;
    auto shift_down = [&](const LaurentPolynomial& p, const std::vector<int>& by) {
        Polynomial r(plain);
        for (auto& [m, c] : p.terms()) {
            Monomial s = m;
            for (int i = 0; i < n; ++i) s.e[i] -= by[i];
            r.add_term(s, Rational(c));
        }
        return r;
    };
    Polynomial f0 = shift_down(f, alpha), g0 = shift_down(g, beta);

    auto q0 = divide_exact(f0, g0);
    if (!q0) return std::nullopt;
    LaurentPolynomial q(f.ring());
    for (auto& [m, c] : q0->terms()) {
        if (!is_integer(c)) return std::nullopt;
        Monomial s = m;
        for (int i = 0; i < n; ++i) s.e[i] += alpha[i] - beta[i];
        q.add_term(s, c.get_num());
    }
    return q;
}

}  // namespace qi
