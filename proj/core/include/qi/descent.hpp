#pragma once

#include <map>
#include <set>
#include <vector>

#include "qi/polynomial.hpp"
#include "qi/weyl.hpp"

namespace qi {

// Statistics of (signed) permutations in one-line window notation over
// {-n..-1, 1..n}, descents taken in the integer order.
std::set<int> descent_positions(const std::vector<int>& one_line);  // 1-based positions
int maj(const std::vector<int>& one_line);
int neg(const std::vector<int>& one_line);
// Flag major index 2*maj + neg; the sum over i of f_i below.
int fmaj(const std::vector<int>& one_line);
// f_i = 2 d_i + eps_i with d_i the number of descents at positions >= i.
int flag_exponent(const std::vector<int>& one_line, int i);  // 1-based i

struct PermStatistic {
    SignedPermutation element;
    int maj = 0;
    int fmaj = 0;
    std::set<int> descent_set;
};
PermStatistic statistics(const SignedPermutation& w);

// Descent monomial of sigma in S_n inside Q[x1..xn, y1..yn]:
//   prod_{sigma^{-1}(i) > sigma^{-1}(i+1)} (x1..xi)
//   * prod_{sigma(j) > sigma(j+1)} (y_{sigma(1)}..y_{sigma(j)}).
Polynomial descent_monomial(const SignedPermutation& sigma, const Ring& xy);
// Its average under the diagonal action; degree maj(sigma) + maj(sigma^{-1}).
Polynomial descent_invariant(const WeylGroup& Sn, const SignedPermutation& sigma, const Ring& xy);

// Diagonal signed descent monomial of sigma in B_n:
//   prod_i x_i^{f_i(sigma^{-1})} y_i^{f_{|sigma^{-1}(i)|}(sigma)}.
Polynomial signed_descent_monomial(const SignedPermutation& sigma, const Ring& xy);
Polynomial signed_descent_invariant(const WeylGroup& Bn, const SignedPermutation& sigma,
                                    const Ring& xy);

// sum_sigma t^{maj(sigma) + maj(sigma^{-1})} (plain) or
// sum_sigma t^{fmaj(sigma) + fmaj(sigma^{-1})} (signed), as coefficient maps
// keyed by the exponent; these equal the degree generating functions of the
// descent monomials in monomial-degree units.
std::map<int, long long> maj_generating_function(const WeylGroup& W, bool use_flag_statistic);

}  // namespace qi
