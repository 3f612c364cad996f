#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qi/quasi.hpp"

namespace qi {

// Rational function numerator / prod_j (1 - t^{e_j}) with exact integer
// coefficients. Exponents are internal monomial degrees; user-facing output
// doubles them into the cohomological grading.
class HilbertSeries {
  public:
    HilbertSeries() = default;

    static HilbertSeries fraction(std::map<int, Integer> numerator,
                                  std::multiset<int> denominator);
    static HilbertSeries constant(Integer c);

    const std::map<int, Integer>& numerator() const { return num_; }
    const std::multiset<int>& denominator() const { return den_; }

    HilbertSeries operator+(const HilbertSeries& o) const;

    // Exact equality as rational functions by cross-multiplication over the
    // union denominator.
    bool equals(const HilbertSeries& o) const;

    // Coefficients of the power-series expansion, indices 0..max_internal.
    std::vector<Integer> expand(int max_internal) const;
    // Indexed by cohomological degree; odd entries are zero.
    std::vector<Integer> expand_coh(int max_coh) const;

    // Rendered with cohomological exponents, e.g. "(1 + t^6)/((1-t^2)(1-t^4))".
    std::string str() const;

  private:
    std::map<int, Integer> num_;  // exponent -> coefficient
    std::multiset<int> den_;      // factors (1 - t^e)
};

// Cor-4.4-style closed form: (1-t^{2mk})/prod(1-t^{2 d_i}) + t^{2mk}/(1-t^2)^rank.
HilbertSeries closed_form_flag(const PairSpec& pair, int m);

// Commutativity closed forms; the numerator statistic is computed by group
// enumeration (maj for U/SU, flag-major for Sp).
HilbertSeries closed_form_bcom(BComFamily family, int n, int m);

enum class PartialFamily { U, Sp };
// Partial-flag closed forms assembled from (n, k) directly.
HilbertSeries closed_form_partial(int n, int k, int m, PartialFamily family);

// (sum_b t^{deg b}) / prod (1 - t^{2 d_i}).
HilbertSeries from_basis(const FreeBasis& basis);

bool series_equal(const HilbertSeries& a, const HilbertSeries& b);
std::vector<Integer> series_expand(const HilbertSeries& a, int max_coh);

// Series of the T-equivariant quotient Q[V]/(theta): (1-t^{2k})/(1-t^2)^n.
HilbertSeries quotient_series(int n, int k);

}  // namespace qi
