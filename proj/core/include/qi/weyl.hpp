#pragma once

#include <string>
#include <vector>

#include "qi/polynomial.hpp"

namespace qi {

// Weyl group element: basis vector e_i maps to sign[i] * e_{perm[i]}.
// On an ordinary polynomial ring the action substitutes
// t_i -> sign[i] * t_{perm[i]}; on a Laurent ring it substitutes
// z_i -> z_{perm[i]}^{sign[i]} (characters, not linear forms).
struct SignedPermutation {
    std::vector<int> perm;  // 0-based images
    std::vector<int> sign;  // +1 / -1

    static SignedPermutation identity(int n);

    int n() const { return static_cast<int>(perm.size()); }
    bool is_identity() const;
    // act(a.compose(b), f) == act(a, act(b, f))
    SignedPermutation compose(const SignedPermutation& b) const;
    SignedPermutation inverse() const;

    // One-line window notation over {-n..-1, 1..n}: entry i (1-based position)
    // is sign[i-1] * (perm[i-1] + 1).
    std::vector<int> one_line() const;

    // rank(M - I) where M is the signed permutation matrix.
    int reflection_rank() const;
    bool is_reflection() const { return compose(*this).is_identity() && reflection_rank() == 1; }

    std::string str() const;
    auto operator<=>(const SignedPermutation&) const = default;
};

template <class C>
Poly<C> act(const SignedPermutation& w, const Poly<C>& f) {
    const Ring& ring = f.ring();
    if (ring.nvars() != w.n()) throw std::invalid_argument("action arity mismatch");
    Poly<C> r(ring);
    for (auto& [m, c] : f.terms()) {
        Monomial img(ring.nvars());
        C coeff = c;
        for (int i = 0; i < ring.nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (ring.laurent) {
                img.e[w.perm[i]] += w.sign[i] * m.e[i];
            } else {
                img.e[w.perm[i]] += m.e[i];
                if (w.sign[i] < 0 && (m.e[i] & 1)) coeff = -coeff;
            }
        }
        r.add_term(img, coeff);
    }
    return r;
}

enum class Side { X, Y, Diagonal };

// Extends w to the 2n-variable ring x1..xn,y1..yn acting on the chosen block.
SignedPermutation extend_to_xy(const SignedPermutation& w, Side side);

template <class C>
Poly<C> act_xy(const SignedPermutation& w, const Poly<C>& f, Side side) {
    return act(extend_to_xy(w, side), f);
}

// Finite signed-permutation reflection group with BFS word lengths over the
// declared simple generators and the list of reflections (rank-1 criterion).
struct WeylGroup {
    std::string name;
    int n = 0;
    std::vector<SignedPermutation> generators;
    std::vector<SignedPermutation> elements;  // elements[0] is the identity
    std::vector<int> length;                  // BFS distance in the Cayley graph
    std::vector<int> reflections;             // indices into elements
    std::vector<int> degrees;                 // fundamental degrees d_i

    size_t order() const { return elements.size(); }
    bool contains(const SignedPermutation& w) const;
    const SignedPermutation& reflection(int i) const { return elements[reflections[i]]; }
    long long degree_product() const;
    int degree_sum_minus_rank() const;  // sum (d_i - 1)
};

WeylGroup generate_group(std::vector<SignedPermutation> generators, std::vector<int> degrees,
                         std::string name, size_t bound = 1000000);

WeylGroup symmetric_group(int n);
WeylGroup hyperoctahedral_group(int n);  // B_n
// Young-type products acting on consecutive blocks of coordinates.
WeylGroup product_symmetric(const std::vector<int>& blocks);
WeylGroup product_hyperoctahedral(const std::vector<int>& blocks);
// The order-12 dihedral reflection subgroup of B_3 (Weyl group of G2),
// acting on three coordinates; it preserves the hyperplane t1+t2+t3 = 0.
WeylGroup dihedral_g2();
std::vector<SignedPermutation> dihedral_g2_reflection_table();

// Coefficients of sum_w t^{l(w)}; equals prod (1-t^{d_i})/(1-t).
std::vector<long long> poincare_polynomial(const WeylGroup& W);
std::vector<long long> poincare_product_formula(const std::vector<int>& degrees);

// Group averaging; the projection onto invariants.
Polynomial reynolds(const WeylGroup& W, const Polynomial& f);
// Average over the diagonal action on an x/y ring of 2*W.n variables.
Polynomial reynolds_diagonal(const WeylGroup& W, const Polynomial& f);

// Checks generator-wise; sufficient because the generators generate.
template <class C>
bool is_invariant(const WeylGroup& W, const Poly<C>& f) {
    for (auto& g : W.generators)
        if (!(act(g, f) == f)) return false;
    return true;
}
bool is_invariant_diagonal(const WeylGroup& W, const Polynomial& f);

}  // namespace qi
