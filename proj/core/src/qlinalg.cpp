#include "qi/qlinalg.hpp"

namespace qi {

std::vector<QVec> nullspace(std::vector<QVec> rows, size_t cols) {
    // Forward elimination with pivot bookkeeping.
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = 1 / rows[r][c];
        for (size_t j = c; j < cols; ++j)
            if (rows[r][j] != 0) rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (size_t j = c; j < cols; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<QVec> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rational(0));
        v[c] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

int nullspace_projection_dim(const std::vector<QVec>& rows, size_t cols, size_t k) {
    auto basis = nullspace(rows, cols);
    IncrementalSpan span(k);
    for (auto& v : basis) span.add(QVec(v.begin(), v.begin() + k));
    return span.rank();
}

}  // namespace qi
