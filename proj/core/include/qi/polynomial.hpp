#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qi/numeric.hpp"
#include "qi/ring.hpp"

namespace qi {

// Sparse multivariate polynomial with exact coefficients. Terms are held in
// descending graded-lex order, so begin() is the leading term and iteration
// order doubles as the canonical rendering order. Values are immutable in
// spirit: every operation returns a fresh polynomial.
template <class C>
class Poly {
  public:
    using TermMap = std::map<Monomial, C, GrlexGreater>;

    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}
    Poly(Ring ring, const C& c) : ring_(std::move(ring)) {
        if (c != 0) terms_.emplace(Monomial(ring_.nvars()), c);
    }
    Poly(Ring ring, Monomial m, const C& c) : ring_(std::move(ring)) {
        check_exponents(m);
        if (c != 0) terms_.emplace(std::move(m), c);
    }

    static Poly zero(const Ring& ring) { return Poly(ring); }
    static Poly one(const Ring& ring) { return Poly(ring, C(1)); }
    static Poly variable(const Ring& ring, int i) {
        Monomial m(ring.nvars());
        m.e[i] = 1;
        return Poly(ring, m, C(1));
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        require(!terms_.empty(), "leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const C& leading_coefficient() const {
        require(!terms_.empty(), "leading term of zero polynomial");
        return terms_.begin()->second;
    }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        bool first = true;
        for (auto& [m, c] : terms_) {
            int md = m.degree();
            if (first || md > d) d = md;
            first = false;
        }
        return terms_.empty() ? 0 : d;
    }

    // Common degree of all terms, or nullopt when inhomogeneous (zero counts
    // as homogeneous of any degree; we report 0).
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return 0;
        int d = terms_.begin()->first.degree();
        for (auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

    // Homogeneous part of the given monomial degree.
    Poly component(int degree) const {
        Poly r(ring_);
        for (auto& [m, c] : terms_)
            if (m.degree() == degree) r.terms_.emplace(m, c);
        return r;
    }

    std::vector<int> degrees_present() const {
        std::vector<int> ds;
        for (auto& [m, c] : terms_) {
            int d = m.degree();
            bool seen = false;
            for (int x : ds) seen |= (x == d);
            if (!seen) ds.push_back(d);
        }
        return ds;
    }

    void add_term(const Monomial& m, const C& c) {
        check_exponents(m);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        same_ring(o);
        Poly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        same_ring(o);
        Poly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        same_ring(o);
        Poly r(ring_);
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly operator*(const C& s) const {
        Poly r(ring_);
        if (s == 0) return r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

    Poly pow(int k) const {
        require(k >= 0, "negative power of a non-monomial");
        Poly r = one(ring_);
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    // Substitute images[i] for variable i. Images live in the target ring.
    template <class D>
    Poly<D> substitute(const std::vector<Poly<D>>& images) const {
        require(static_cast<int>(images.size()) == ring_.nvars(), "substitution arity mismatch");
        const Ring& target = images.empty() ? Ring{} : images[0].ring();
        Poly<D> r(target);
        for (auto& [m, c] : terms_) {
            Poly<D> t = Poly<D>::one(target) * D(c);
            for (int i = 0; i < ring_.nvars(); ++i) {
                require(m.e[i] >= 0, "substitution into negative exponent");
                if (m.e[i] > 0) t = t * images[i].pow(m.e[i]);
            }
            r = r + t;
        }
        return r;
    }

    std::string str() const;

  private:
    void same_ring(const Poly& o) const { require(ring_ == o.ring_, "ring mismatch"); }
    void check_exponents(const Monomial& m) const {
        require(m.nvars() == ring_.nvars(), "monomial arity mismatch");
        if (!ring_.laurent)
            for (int x : m.e) require(x >= 0, "negative exponent outside a Laurent ring");
    }
    static void require(bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    }

    Ring ring_;
    TermMap terms_;
};

using Polynomial = Poly<Rational>;
using LaurentPolynomial = Poly<Integer>;

// Canonical rendering: terms in descending graded-lex order, coefficients as
// "a" or "a/b", explicit '*' between factors, '^' for exponents != 1.
template <class C>
std::string Poly<C>::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        C a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool coeff_one = (a == 1);
        if (!coeff_one || m.is_one()) out << to_string(a);
        bool need_star = !coeff_one && !m.is_one();
        bool printed = false;
        for (int i = 0; i < ring_.nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (need_star || printed) out << "*";
            out << ring_.vars[i];
            if (m.e[i] != 1) out << "^" << m.e[i];
            printed = true;
            need_star = false;
        }
    }
    return out.str();
}

// Division with remainder by a single divisor under the global graded-lex
// order. A single polynomial is a Groebner basis of the ideal it generates,
// so the remainder is canonical and vanishes exactly when g divides f.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g);

// Quotient f/g when g divides f exactly; nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

// Laurent divisibility over the integers: strip monomial content from both
// operands, divide the polynomial parts over Q, and accept only integer
// quotients. See the tests for the unit/monomial edge cases.
std::optional<LaurentPolynomial> laurent_divide_exact(const LaurentPolynomial& f,
                                                      const LaurentPolynomial& g);

// Coefficient-ring conversions (Laurent division runs through the rational path).
Polynomial to_rational_poly(const LaurentPolynomial& f, const Ring& target);
std::optional<LaurentPolynomial> to_integer_poly(const Polynomial& f, const Ring& target);

// Elementary symmetric polynomial sigma_k(vals) of arbitrary ring elements.
template <class C>
Poly<C> elementary_symmetric(const std::vector<Poly<C>>& vals, int k) {
    if (vals.empty()) throw std::invalid_argument("elementary_symmetric of empty list");
    const Ring& ring = vals[0].ring();
    // dp[j] = sigma_j of the prefix processed so far
    std::vector<Poly<C>> dp;
    dp.push_back(Poly<C>::one(ring));
    for (int j = 0; j < k; ++j) dp.push_back(Poly<C>::zero(ring));
    for (const auto& v : vals)
        for (int j = std::min<int>(k, 1000); j >= 1; --j) dp[j] = dp[j] + dp[j - 1] * v;
    return dp[k];
}

// sigma_k of a contiguous block of ring variables [first, first + count).
template <class C>
Poly<C> elementary_symmetric_vars(const Ring& ring, int first, int count, int k) {
    std::vector<Poly<C>> vars;
    for (int i = 0; i < count; ++i) vars.push_back(Poly<C>::variable(ring, first + i));
    return elementary_symmetric(vars, k);
}

}  // namespace qi
