#include "qi/zlinalg.hpp"

#include <cstdlib>

namespace qi {

ZSolver::ZSolver(std::vector<ZVec> A, size_t cols) : m_(A.size()), n_(cols), H_(std::move(A)) {
    V_.assign(n_, ZVec(n_, Integer(0)));
    for (size_t i = 0; i < n_; ++i) V_[i][i] = 1;

    auto col_axpy = [&](size_t dst, size_t src, const Integer& q) {
        // column dst -= q * column src
        if (q == 0) return;
        for (size_t i = 0; i < m_; ++i)
            if (H_[i][src] != 0) H_[i][dst] -= q * H_[i][src];
        for (size_t i = 0; i < n_; ++i)
            if (V_[i][src] != 0) V_[i][dst] -= q * V_[i][src];
    };
    auto col_swap = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < m_; ++i) std::swap(H_[i][a], H_[i][b]);
        for (size_t i = 0; i < n_; ++i) std::swap(V_[i][a], V_[i][b]);
    };
    auto col_negate = [&](size_t c) {
        for (size_t i = 0; i < m_; ++i) H_[i][c] = -H_[i][c];
        for (size_t i = 0; i < n_; ++i) V_[i][c] = -V_[i][c];
    };

    size_t next = 0;  // next free pivot column slot
    for (size_t r = 0; r < m_ && next < n_; ++r) {
        // Euclid across the active columns until row r has one nonzero left.
        for (;;) {
            size_t best = n_;
            for (size_t c = next; c < n_; ++c) {
                if (H_[r][c] == 0) continue;
                if (best == n_ || mpz_cmpabs(H_[r][c].get_mpz_t(), H_[r][best].get_mpz_t()) < 0)
                    best = c;
            }
            if (best == n_) break;  // row r already clear of active columns
            bool others = false;
            for (size_t c = next; c < n_; ++c) {
                if (c == best || H_[r][c] == 0) continue;
                others = true;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), H_[r][c].get_mpz_t(), H_[r][best].get_mpz_t());
                col_axpy(c, best, q);
            }
            if (!others) {
                col_swap(next, best);
                if (H_[r][next] < 0) col_negate(next);
                piv_.emplace_back(r, next);
                ++next;
                break;
            }
        }
    }
}

std::optional<ZVec> ZSolver::solve(const ZVec& b) const {
    ZVec y(n_, Integer(0));
    for (auto& [r, c] : piv_) {
        Integer acc = b[r];
        for (auto& [r2, c2] : piv_) {
            if (c2 == c) break;
            acc -= H_[r][c2] * y[c2];
        }
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), H_[r][c].get_mpz_t());
        if (rem != 0) return std::nullopt;
        y[c] = q;
    }
    // Verify all rows, including pivotless ones.
    for (size_t i = 0; i < m_; ++i) {
        Integer acc(0);
        for (auto& [r, c] : piv_)
            if (H_[i][c] != 0 && y[c] != 0) acc += H_[i][c] * y[c];
        if (acc != b[i]) return std::nullopt;
    }
    ZVec x(n_, Integer(0));
    for (size_t i = 0; i < n_; ++i) {
        Integer acc(0);
        for (auto& [r, c] : piv_)
            if (V_[i][c] != 0 && y[c] != 0) acc += V_[i][c] * y[c];
        x[i] = acc;
    }
    return x;
}

}  // namespace qi
