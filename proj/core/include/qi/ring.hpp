#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qi {

// Ambient polynomial ring descriptor: named variables plus a flag allowing
// negative exponents (Laurent rings).
struct Ring {
    std::vector<std::string> vars;
    bool laurent = false;

    int nvars() const { return static_cast<int>(vars.size()); }
    bool operator==(const Ring&) const = default;

    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }
};

inline Ring make_ring(const std::string& prefix, int n, bool laurent = false) {
    Ring r;
    r.laurent = laurent;
    r.vars.reserve(n);
    for (int i = 1; i <= n; ++i) r.vars.push_back(prefix + std::to_string(i));
    return r;
}

inline Ring poly_ring(int n, const std::string& prefix = "t") { return make_ring(prefix, n, false); }
inline Ring laurent_ring(int n, const std::string& prefix = "z") { return make_ring(prefix, n, true); }

// x1..xn, y1..yn; used for diagonal-invariant and tensor-square computations.
inline Ring xy_ring(int n) {
    Ring r;
    for (int i = 1; i <= n; ++i) r.vars.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) r.vars.push_back("y" + std::to_string(i));
    return r;
}

// Exponent vector; length must match the ambient ring's variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    // Componentwise quotient; caller must know it stays valid for the ring.
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
};

// Global monomial order: graded lexicographic with var 0 > var 1 > ...
// Returns <0, 0, >0 like a three-way comparison (a vs b).
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

// Map comparator putting the grlex-largest monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

// All monomials of the given total degree, in ascending graded-lex order.
// Only meaningful for non-Laurent rings.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

inline long long count_monomials(int nvars, int degree) {
    if (degree < 0) return 0;
    // C(degree + nvars - 1, nvars - 1)
    long long r = 1;
    for (int i = 1; i <= nvars - 1; ++i) r = r * (degree + i) / i;
    return r;
}

}  // namespace qi
