#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qi/numeric.hpp"

namespace qi {

using QVec = std::vector<Rational>;

// Incremental row-echelon span over Q. Vectors are reduced against the rows
// added so far; the residual is zero exactly when the vector already lies in
// the span. Deterministic: pivots are the first nonzero coordinates.
class IncrementalSpan {
  public:
    explicit IncrementalSpan(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    QVec reduce(QVec v) const {
        for (auto& [p, row] : rows_) {
            if (v[p] == 0) continue;
            Rational f = v[p];
            for (size_t j = p; j < dim_; ++j)
                if (row[j] != 0) v[j] -= f * row[j];
        }
        return v;
    }

    bool contains(const QVec& v) const { return is_zero(reduce(v)); }

    // Returns true when v enlarged the span.
    bool add(QVec v) {
        v = reduce(std::move(v));
        size_t p = pivot(v);
        if (p == dim_) return false;
        Rational inv = 1 / v[p];
        for (size_t j = p; j < dim_; ++j)
            if (v[j] != 0) v[j] *= inv;
        rows_.emplace(p, std::move(v));
        return true;
    }

    static bool is_zero(const QVec& v) {
        for (auto& x : v)
            if (x != 0) return false;
        return true;
    }

  private:
    static size_t pivot(const QVec& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return v.size();
    }

    size_t dim_;
    std::map<size_t, QVec> rows_;  // pivot column -> normalized row
};

// Like IncrementalSpan, but tracks how each echelon row decomposes over the
// originally added generators, so members can be expressed as combinations.
class SpanSolver {
  public:
    explicit SpanSolver(size_t dim) : dim_(dim) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    size_t generators() const { return ngen_; }

    void add(QVec v) {
        QVec comb(ngen_ + 1, Rational(0));
        comb[ngen_] = 1;
        ++ngen_;
        for (auto& [p, rc] : rows_) extend(rc.second, ngen_);
        reduce_tracked(v, comb);
        size_t p = pivot(v);
        if (p == dim_) return;  // dependent generator; combination discarded
        Rational inv = 1 / v[p];
        scale(v, inv, p);
        scale(comb, inv, 0);
        rows_.emplace(p, std::make_pair(std::move(v), std::move(comb)));
    }

    // Coefficients over the added generators with sum_i c_i * gen_i = v.
    std::optional<QVec> express(QVec v) const {
        QVec comb(ngen_, Rational(0));
        for (auto& [p, rc] : rows_) {
            if (v[p] == 0) continue;
            Rational f = v[p];
            for (size_t j = p; j < dim_; ++j)
                if (rc.first[j] != 0) v[j] -= f * rc.first[j];
            for (size_t j = 0; j < rc.second.size(); ++j)
                if (rc.second[j] != 0) comb[j] += f * rc.second[j];
        }
        if (!IncrementalSpan::is_zero(v)) return std::nullopt;
        return comb;
    }

  private:
    static size_t pivot(const QVec& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return v.size();
    }
    static void extend(QVec& c, size_t n) { c.resize(n, Rational(0)); }
    static void scale(QVec& v, const Rational& s, size_t from) {
        for (size_t j = from; j < v.size(); ++j)
            if (v[j] != 0) v[j] *= s;
    }
    void reduce_tracked(QVec& v, QVec& comb) const {
        for (auto& [p, rc] : rows_) {
            if (v[p] == 0) continue;
            Rational f = v[p];
            for (size_t j = p; j < dim_; ++j)
                if (rc.first[j] != 0) v[j] -= f * rc.first[j];
            for (size_t j = 0; j < rc.second.size() && j < comb.size(); ++j)
                if (rc.second[j] != 0) comb[j] -= f * rc.second[j];
        }
    }

    size_t dim_;
    size_t ngen_ = 0;
    std::map<size_t, std::pair<QVec, QVec>> rows_;  // pivot -> (row, combination)
};

// Nullspace basis of the homogeneous system rows * x = 0 (each row has
// `cols` entries). Deterministic basis: one vector per free column.
std::vector<QVec> nullspace(std::vector<QVec> rows, size_t cols);

// Dimension of the projection of null(rows) onto the first k coordinates.
int nullspace_projection_dim(const std::vector<QVec>& rows, size_t cols, size_t k);

}  // namespace qi
