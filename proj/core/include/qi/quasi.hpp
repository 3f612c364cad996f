#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qi/catalog.hpp"
#include "qi/engine.hpp"

namespace qi {

enum class Variant { Flag, TEquiv, BCom, Filtered };
enum class BComFamily { U, SU, Sp };

std::string variant_name(Variant v);
std::string bcom_family_name(BComFamily f);

// One membership problem: a pair (or commutativity family, or filtered
// chain) together with the multiplicity data.
struct QuasiSpec {
    Variant variant = Variant::Flag;
    std::optional<PairSpec> pair;  // Flag, TEquiv
    int m = 0;
    std::optional<BComFamily> family;  // BCom
    int bcom_n = 0;
    std::optional<FilteredSpec> filtered;  // Filtered
    std::vector<int> multiplicities;

    std::string label() const;
    // Monomial degree of theta^m for the single-theta variants.
    int theta_power_degree() const;
};

QuasiSpec flag_spec(PairSpec pair, int m);
QuasiSpec tequiv_spec(PairSpec pair, int m);
QuasiSpec bcom_spec(BComFamily family, int n, int m);
QuasiSpec filtered_join_spec(FilteredSpec chain, std::vector<int> multiplicities);

struct MemberResult {
    bool member = false;
    std::optional<SignedPermutation> witness;  // violating reflection
    std::string detail;
};

// Reflection congruence test. Inhomogeneous inputs are split into
// homogeneous components (the modules are graded). Inputs to the quotient
// variants must be diagonal-invariant (BCom) and are reduced internally.
MemberResult is_member(const Polynomial& f, const QuasiSpec& spec);

struct FreeBasis {
    std::vector<int> base_degrees;      // d_i of the base invariant ring
    std::vector<Polynomial> elements;   // homogeneous, elements[0] = 1
    int rank() const { return static_cast<int>(elements.size()); }
    std::vector<int> monomial_degrees() const;
    std::vector<int> coh_degrees() const;
};

// Greedy graded-lex coinvariant basis for the invariant system of a pair.
FreeBasis coinvariant_basis(const PairSpec& pair);
FreeBasis coinvariant_basis(const WeylGroup& W, const std::vector<Polynomial>& invariants,
                            const Ring& ring);

// Basis of the W1-invariant ring as a free module over the ring generated by
// `upper_invariants`, selected greedily over orbit sums.
std::vector<Polynomial> relative_invariant_basis(const WeylGroup& W1,
                                                 const std::vector<Polynomial>& upper_invariants,
                                                 const Ring& ring, long long expected);

// Free-module basis {1, theta^m b_i} for the spec's variant.
FreeBasis qm_basis(const QuasiSpec& spec);

// Independent degreewise linear-algebra oracle: dimension of the space of
// degree-d members (cohomological degree, 2 x monomial degree).
int oracle_dimension(const QuasiSpec& spec, int coh_degree, int truncation = 24);

struct FiltrationReport {
    std::vector<std::string> failures;
    int degrees_checked = 0;
    int containments_checked = 0;
    bool ok() const { return failures.empty(); }
};

// Q_{m+1} into Q_m containment on basis elements, plus degreewise
// stabilization of the oracle to dim (Q[V]^W)_d once 2mk > d.
FiltrationReport filtration_check(const PairSpec& pair, int m_max, int D);

// Graded dimensions (by monomial degree, 0..D) of the invariant ring of the
// pair's degree data: coefficients of prod 1/(1 - t^{d_i}).
std::vector<long long> invariant_ring_dimensions(const std::vector<int>& degrees, int D);

// Shared engine instances (memoized per family / pair).
const GradedComponentEngine& bcom_engine(BComFamily family, int n);
const GradedComponentEngine& tensor_engine(const PairSpec& pair);

}  // namespace qi
