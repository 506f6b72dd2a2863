// Exact rational linear algebra: small dense matrices, reduced row echelon
// form, nullspace bases, and inversion. Everything is Gaussian elimination
// over Q with the first nonzero entry as pivot, so results are
// deterministic.

#pragma once

#include <utility>
#include <vector>

#include "hcube/rational.hpp"

namespace hcube {

class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(check_dim(rows)) * static_cast<std::size_t>(check_dim(cols)),
             Rational(0)) {}

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[index(i, j)]; }
    const Rational& at(int i, int j) const { return a_[index(i, j)]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
        RationalMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) {
        return !(a == b);
    }

  private:
    static int check_dim(int d) {
        if (d < 1) throw InputError("matrix dimensions must be >= 1");
        return d;
    }

    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

// In-place RREF; returns the pivot column of each pivot row, in row order.
inline std::vector<int> rref_in_place(RationalMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        const Rational inv_pivot = Rational(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv_pivot;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of {v : Av = 0}. Convention: free columns in ascending order, the
// free variable of each basis vector set to 1. Deterministic.
inline std::vector<std::vector<Rational>> mat_nullspace(RationalMatrix a) {
    const int n = a.cols();
    const std::vector<int> pivots = rref_in_place(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -a.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline int mat_rank(RationalMatrix a) { return static_cast<int>(rref_in_place(a).size()); }

inline RationalMatrix mat_inverse(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("only square matrices can be inverted");
    const int n = a.rows();
    RationalMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const std::vector<int> pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw SingularMatrixError("matrix is singular");
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Incremental independence test: keeps a forward-reduced row set and
// rejects vectors that lie in the current span.
class RrefAccumulator {
  public:
    explicit RrefAccumulator(std::size_t dim) : dim_(dim) {}

    bool insert(std::vector<Rational> v) {
        if (v.size() != dim_) throw InputError("vector dimension mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivot_cols_[r];
            if (v[p] == 0) continue;
            const Rational factor = v[p];
            for (std::size_t j = p; j < dim_; ++j) v[j] -= factor * rows_[r][j];
        }
        std::size_t p = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j] != 0) {
                p = j;
                break;
            }
        if (p == dim_) return false;
        const Rational inv_pivot = Rational(1) / v[p];
        for (std::size_t j = p; j < dim_; ++j) v[j] *= inv_pivot;
        rows_.push_back(std::move(v));
        pivot_cols_.push_back(p);
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace hcube
