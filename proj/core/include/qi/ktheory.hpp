#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qi/polynomial.hpp"
#include "qi/weyl.hpp"

namespace qi {

// Representation ring R(T) of a maximal torus as an integer Laurent ring
// with the Weyl action, together with the class Theta cutting out R(H),
// and named generators of the invariant subring R(G) = R(T)^W.
struct RepRing {
    std::string name;
    Ring ring;  // Laurent
    WeylGroup weyl;
    LaurentPolynomial Theta;
    std::vector<std::pair<std::string, LaurentPolynomial>> invariant_generators;
};

RepRing u_rep_ring(int n);      // R(T) of U(n); Theta = prod (1 - z_i)
RepRing sp_rep_ring(int n);     // R(T) of Sp(n); Theta = prod (1 - z_i)(1 - z_i^{-1})
// R(T) of Spin(7) realized inside Z[u1^,u2^,u3^] with z_i = u_i^2; the spin
// weights need the halved lattice, and doubling variables keeps Delta
// polynomial. Validates Delta^2 = 1 + lambda1 + lambda2 + lambda3 on
// construction.
RepRing spin7_rep_ring();

struct KMemberResult {
    bool member = false;
    std::optional<SignedPermutation> witness;  // violating reflection
};

// f is congruent to all its reflection images modulo (Theta)^m.
KMemberResult k_is_member(const LaurentPolynomial& f, const RepRing& R, int m);

struct KPresentationReport {
    std::string ring;
    int m = 0;
    int window = 0;           // B: candidate exponents lie in [-B, B]^n
    int solver_window = 0;    // enlarged window used for g and h
    long monomials_checked = 0;
    long members = 0;
    long expressed = 0;
    long synth_checked = 0;  // direction (i): g + Theta^m h candidates tested
    std::vector<std::string> window_too_small;  // members not expressible in the window
    std::vector<std::string> failures;          // genuine violations of the presentation
    bool pass() const { return failures.empty(); }
};

// Two-sided finite check of K_G(F_m) = R(G) + Theta^m R(T) on the exponent
// window [-B, B]^n: every symmetrized monomial plus Theta^m times a monomial
// must be a member, and every member monomial must be an integer combination
// g + Theta^m h with support in the enlarged window.
KPresentationReport k_presentation_check(const RepRing& R, int m, int B);

// Filtration on the window: every member at level m+1 is a member at level m.
bool k_filtration_on_window(const RepRing& R, int m_max, int B);

}  // namespace qi
