#pragma once

#include <optional>
#include <vector>

#include "qi/numeric.hpp"

namespace qi {

using ZVec = std::vector<Integer>;

// Solves A x = b over the integers via a column Hermite reduction A*V = H.
// The reduction is done once; each solve is a forward substitution with
// exact-divisibility checks. Solutions are not unique; any witness works.
class ZSolver {
  public:
    ZSolver(std::vector<ZVec> A, size_t cols);

    std::optional<ZVec> solve(const ZVec& b) const;

    size_t rows() const { return m_; }
    size_t cols() const { return n_; }

  private:
    size_t m_ = 0, n_ = 0;
    std::vector<ZVec> H_;                         // m x n after column reduction
    std::vector<ZVec> V_;                         // n x n unimodular, A*V = H
    std::vector<std::pair<size_t, size_t>> piv_;  // (row, col) pivots, rows ascending
};

}  // namespace qi
