#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qi/ktheory.hpp"
#include "qi/polynomial.hpp"
#include "qi/weyl.hpp"

namespace qi {

// Catalog entry for a pair (G, H) with G/H an odd sphere S^{2k-1}. The
// cohomology side lives in Q[t1..tn]; theta is the Euler class of the
// spherical bundle, of monomial degree k (cohomological degree 2k).
struct PairSpec {
    std::string name;
    std::string description;
    int n = 0;  // ambient variable count
    int k = 0;  // sphere parameter: theta has monomial degree k
    WeylGroup weyl;
    Ring ring;                  // t1..tn
    std::vector<int> degrees;   // module degrees d_i of the relevant invariant ring
    Polynomial euler_theta;
    std::vector<Polynomial> fundamental_invariants;  // matching `degrees`
    // Reduced models (SU(n)): ambient relation whose graded-lex normal form
    // eliminates the leading variable; all data above is stored in normal form.
    std::optional<Polynomial> ambient_relation;
    std::optional<RepRing> ktheory;
    bool alias_derived = false;  // spin9-spin7 inherits theta via the Sp(4)/Sp(3) alias

    // Variable indices actually carrying the reduced ring (all of them when
    // there is no ambient relation).
    std::vector<int> active_vars() const;
    // Action on reduced representatives: act, then take the normal form.
    Polynomial act_reduced(const SignedPermutation& w, const Polynomial& f) const;
    Polynomial normal_form(const Polynomial& f) const;
};

// Built-in entries. Families are constructible for any feasible size via
// find_pair; this lists the representatives that ship with the catalog.
std::vector<PairSpec> catalog_list();

// Accepted names: u:N, su:N, sp:N, pu:N:K, psp:N:K, spin7-g2, spin9-spin7.
PairSpec find_pair(const std::string& name);
bool pair_exists(const std::string& name);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
ValidationReport validate_pair(const PairSpec& p);

// One step of a filtered join: a reflection subgroup, its Euler class and
// the fundamental invariants of its invariant ring.
struct FilteredStep {
    WeylGroup weyl;
    Polynomial theta;
    std::vector<Polynomial> invariants;
};

struct FilteredSpec {
    std::string name;
    int n = 0;
    Ring ring;
    std::vector<FilteredStep> chain;  // W_1 < W_2 < ... (checked by containment)
};

FilteredSpec u3_chain();  // T < U(2)xU(1) < U(3): theta = (t1t2, t1t2t3)
ValidationReport validate_filtered(const FilteredSpec& spec);
FilteredSpec filtered_from_json(const std::string& json_text);

// JSON catalog export: {name, n, k, degrees, theta, Theta?} per entry.
std::string catalog_json();

// Symmetric-function helpers shared by the catalog and tests.
Polynomial elem_sym(const Ring& ring, int first, int count, int k);          // sigma_k(t_i)
Polynomial elem_sym_squares(const Ring& ring, int first, int count, int k);  // sigma_k(t_i^2)

}  // namespace qi
