#include "samelson/linalg.hpp"

namespace samelson {

namespace {

// col_dst += f * col_src together with the matching row operation, keeping
// d congruent to the original matrix; q accumulates the column operations.
void add_col_row(QMat& d, QMat& q, int dst, int src, const Rat& f) {
  int n = d.rows();
  for (int r = 0; r < n; ++r) d(r, dst) += f * d(r, src);
  for (int c = 0; c < n; ++c) d(dst, c) += f * d(src, c);
  for (int r = 0; r < n; ++r) q(r, dst) += f * q(r, src);
}

void swap_col_row(QMat& d, QMat& q, int a, int b) {
  int n = d.rows();
  for (int r = 0; r < n; ++r) std::swap(d(r, a), d(r, b));
  for (int c = 0; c < n; ++c) std::swap(d(a, c), d(b, c));
  for (int r = 0; r < n; ++r) std::swap(q(r, a), q(r, b));
}

}  // namespace

CongruenceDiagonalization congruence_diagonalize(QMat b) {
  int n = b.rows();
  QMat q = QMat::identity(n);
  for (int k = 0; k < n; ++k) {
    if (is_zero(b(k, k))) {
      int with_diag = -1;
      for (int j = k + 1; j < n; ++j)
        if (!is_zero(b(j, j))) {
          with_diag = j;
          break;
        }
      if (with_diag >= 0) {
        swap_col_row(b, q, k, with_diag);
      } else {
        // all remaining diagonal entries vanish; manufacture a pivot from
        // a nonzero off-diagonal entry, or stop if the block is zero
        int p = -1, r = -1;
        for (int i = k; i < n && p < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!is_zero(b(i, j))) {
              p = i;
              r = j;
              break;
            }
        if (p < 0) break;
        add_col_row(b, q, p, r, Rat(1));  // b(p,p) becomes 2*b(p,r)
        if (p != k) swap_col_row(b, q, k, p);
      }
    }
    Rat pivot = b(k, k);
    for (int j = k + 1; j < n; ++j) {
      if (is_zero(b(k, j))) continue;
      add_col_row(b, q, j, k, -b(k, j) / pivot);
    }
  }
  CongruenceDiagonalization out;
  out.transform = q;
  out.diagonal.resize(n);
  for (int i = 0; i < n; ++i) out.diagonal[i] = b(i, i);
  return out;
}

}  // namespace samelson
