#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "samelson/scalars.hpp"

namespace samelson {

/// Dense matrix over an exact field (Rat or GRat). Desk-scale dimensions;
/// everything is plain Gaussian elimination, no pivoting heuristics needed
/// beyond first-nonzero.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Mat operator*(const Mat& o) const {
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (is_zero(v)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (is_zero(o(k, j))) continue;
          out(i, j) += v * o(k, j);
        }
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }
  Mat operator-(const Mat& o) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }
  Mat operator-() const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& v : a_)
      if (!is_zero(v)) return false;
    return true;
  }

  template <class S>
  std::vector<S> apply(const std::vector<S>& x) const {
    std::vector<S> out(rows_, S(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const T& v = (*this)(i, j);
        if (is_zero(v) || is_zero(x[j])) continue;
        out[i] += x[j] * v;
      }
    return out;
  }

  std::vector<T> column(int c) const {
    std::vector<T> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
    return out;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMat = Mat<Rat>;
using CMat = Mat<GRat>;

inline CMat promote(const QMat& m) {
  CMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = GRat(m(i, j));
  return out;
}

/// In-place reduced row echelon form; returns the rank. Pivot columns are
/// appended to *pivots when given.
template <class T>
int row_reduce(Mat<T>& m, std::vector<int>* pivots = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    T inv = T(1) / m(rank, col);
    for (int c = col; c < m.cols(); ++c) m(rank, c) = m(rank, c) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || is_zero(m(r, col))) continue;
      T f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

template <class T>
int rank_of(Mat<T> m) {
  return row_reduce(m);
}

/// Canonical kernel basis (one vector per free column of the RREF).
template <class T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m) {
  std::vector<int> pivots;
  row_reduce(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Mat<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  // the identity block keeps the augmented rank at n, so singularity shows
  // up as a pivot escaping into the right block
  std::vector<int> pivots;
  row_reduce(aug, &pivots);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n) return std::nullopt;
  Mat<T> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Solves A x = b exactly; nullopt when inconsistent. Free variables are set
/// to zero, so the result is canonical.
template <class T>
std::optional<std::vector<T>> solve(const Mat<T>& a, const std::vector<T>& b) {
  Mat<T> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<int> pivots;
  row_reduce(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), T(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), a.cols());
  return x;
}

/// Returns true when v lies in the span of the given vectors.
template <class T>
bool in_span(const std::vector<std::vector<T>>& vectors, const std::vector<T>& v) {
  if (vectors.empty()) {
    for (const auto& c : v)
      if (!is_zero(c)) return false;
    return true;
  }
  int n = static_cast<int>(v.size());
  Mat<T> a(n, static_cast<int>(vectors.size()));
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < n; ++i) a(i, j) = vectors[j][i];
  return solve(a, v).has_value();
}

/// Congruence diagonalization of a symmetric rational matrix:
/// transform^T * B * transform is diagonal with the returned entries.
struct CongruenceDiagonalization {
  QMat transform;
  std::vector<Rat> diagonal;
};

CongruenceDiagonalization congruence_diagonalize(QMat b);

}  // namespace samelson
