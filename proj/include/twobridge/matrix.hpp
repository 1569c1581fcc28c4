#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "twobridge/poly.hpp"
#include "twobridge/quotient_ring.hpp"

namespace twobridge {

inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline bool is_zero(const Rational& r) { return r == 0; }
inline Rational field_inverse(const Rational& r) {
    if (r == 0) throw std::domain_error("inverting zero");
    return 1 / r;
}

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    R& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const R& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<R> apply(const std::vector<R>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
        std::vector<R> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            R acc = zero_like(v.empty() ? (*this)(r, 0) : v[0]);
            for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
            out.push_back(acc);
        }
        return out;
    }

    /// Rows of `below` appended under this matrix.
    Matrix stacked(const Matrix& below) const {
        if (rows_ && below.rows_ && cols_ != below.cols_) throw std::invalid_argument("column mismatch");
        Matrix out = rows_ ? *this : below;
        if (!rows_) return out;
        out.a_.insert(out.a_.end(), below.a_.begin(), below.a_.end());
        out.rows_ += below.rows_;
        return out;
    }

    Matrix permuted_rows(const std::vector<std::size_t>& perm) const {
        Matrix out = *this;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(perm[r], c);
        return out;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
        using S = decltype(f(std::declval<const R&>()));
        Matrix<S> out;
        out.rows_ = rows_;
        out.cols_ = cols_;
        out.a_.reserve(a_.size());
        for (const auto& x : a_) out.a_.push_back(f(x));
        return out;
    }

private:
    template <class>
    friend class Matrix;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> a_;
};

template <class R>
struct Nullspace {
    std::size_t rank = 0;
    std::vector<std::vector<R>> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Reduced row echelon elimination. The pivot of each column is the first
/// nonzero entry at or below the current row. Over a quotient ring the pivot
/// inversion may throw BranchSplit; callers run this under on_leaves.
/// `sample` is any element of the coefficient ring (needed when m has no rows).
template <class R>
Nullspace<R> nullspace(Matrix<R> m, const R& sample) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        const R inv = field_inverse(m(p, c));
        if (p != row)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(row, k));
        for (std::size_t k = c; k < cols; ++k) m(row, k) = m(row, k) * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || is_zero(m(r, c))) continue;
            const R f = m(r, c);
            for (std::size_t k = c; k < cols; ++k) m(r, k) = m(r, k) - f * m(row, k);
        }
        pivot_cols.push_back(c);
        ++row;
    }
    Nullspace<R> out;
    out.rank = pivot_cols.size();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<R> v(cols, zero_like(sample));
        v[f] = one_like(sample);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, f);
        out.basis.push_back(std::move(v));
    }
    return out;
}

template <class R>
Nullspace<R> nullspace(const Matrix<R>& m) {
    if (m.rows() == 0) throw std::invalid_argument("nullspace of a matrix without rows needs a ring sample");
    return nullspace(m, m(0, 0));
}

struct BranchNullspace {
    BranchPtr branch;
    std::size_t dim;
    std::size_t rank;
    std::vector<std::vector<QElem>> basis;
};

Matrix<QElem> lift_matrix(const Matrix<QElem>& m, const BranchPtr& child);

/// Nullspace over Q[t]/(m) with dynamic splitting; one entry per leaf branch.
std::vector<BranchNullspace> nullspace_dim(const Matrix<QElem>& m, const BranchPtr& branch);

}  // namespace twobridge
