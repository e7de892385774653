#pragma once

#include <random>
#include <vector>

#include "samelson/complex_structure.hpp"
#include "samelson/roots.hpp"

namespace samelson::testing {

using Rng = std::mt19937_64;

// --- fixture algebras ------------------------------------------------------

// [e1,e2] = -e3, [e1,e3] = e2, [e2,e3] = -e1
inline LieAlgebra make_so3() {
  LieAlgebra::Table t;
  t[{0, 1}] = {{2, rat(-1)}};
  t[{0, 2}] = {{1, rat(1)}};
  t[{1, 2}] = {{0, rat(-1)}};
  return LieAlgebra(3, "so3", std::move(t));
}

// 9-dimensional unitary algebra with the standard integer bracket table
inline LieAlgebra make_u3() {
  LieAlgebra::Table t;
  auto put = [&](int i, int j, std::vector<std::pair<int, long>> coeffs) {
    LieAlgebra::Entry e;
    for (auto [k, v] : coeffs) e.emplace_back(k - 1, rat(v));
    t[{i - 1, j - 1}] = std::move(e);
  };
  put(1, 4, {{7, 1}});
  put(1, 5, {{8, 1}});
  put(1, 7, {{4, -1}});
  put(1, 8, {{5, -1}});
  put(2, 4, {{7, -1}});
  put(2, 6, {{9, 1}});
  put(2, 7, {{4, 1}});
  put(2, 9, {{6, -1}});
  put(3, 5, {{8, -1}});
  put(3, 6, {{9, -1}});
  put(3, 8, {{5, 1}});
  put(3, 9, {{6, 1}});
  put(4, 5, {{6, -1}});
  put(4, 6, {{5, 1}});
  put(4, 7, {{1, 2}, {2, -2}});
  put(4, 8, {{9, -1}});
  put(4, 9, {{8, 1}});
  put(5, 6, {{4, -1}});
  put(5, 7, {{9, -1}});
  put(5, 8, {{1, 2}, {3, -2}});
  put(5, 9, {{7, 1}});
  put(6, 7, {{8, -1}});
  put(6, 8, {{7, 1}});
  put(6, 9, {{2, 2}, {3, -2}});
  put(7, 8, {{6, -1}});
  put(7, 9, {{5, -1}});
  put(8, 9, {{4, -1}});
  return LieAlgebra(9, "u3", std::move(t));
}

inline LieAlgebra make_so3so3() { return direct_sum(make_so3(), make_so3(), "so3+so3"); }

inline LieAlgebra make_abelian(int n) { return LieAlgebra(n, "abelian", {}); }

// [e1,e2] = e2: solvable, not of compact type
inline LieAlgebra make_solvable2() {
  LieAlgebra::Table t;
  t[{0, 1}] = {{1, rat(1)}};
  return LieAlgebra(2, "solv2", std::move(t));
}

// [e1,e2] = e3, [e1,e3] = e4: nilpotent, Killing form zero, center too small
inline LieAlgebra make_filiform4() {
  LieAlgebra::Table t;
  t[{0, 1}] = {{2, rat(1)}};
  t[{0, 2}] = {{3, rat(1)}};
  return LieAlgebra(4, "filiform4", std::move(t));
}

// --- frozen expected matrices ----------------------------------------------

// column -> (row, sign) assignments, 1-based
inline QMat matrix_from_assignments(int n, const std::vector<std::array<int, 3>>& assigns) {
  QMat j(n, n);
  for (const auto& a : assigns) j(a[1] - 1, a[0] - 1) = rat(a[2]);
  return j;
}

// J e1c = e1v, J e2c = -e3c, J e3c = e2c, J e1v = -e1c, J e2v = -e3v, J e3v = e2v
inline QMat so3_tangent_j() {
  return matrix_from_assignments(
      6, {{1, 4, 1}, {2, 3, -1}, {3, 2, 1}, {4, 1, -1}, {5, 6, -1}, {6, 5, 1}});
}

// the eighteen assignments of the 18x18 structure on T(u3)
inline QMat u3_tangent_j() {
  return matrix_from_assignments(18, {{1, 10, 1},
                                      {2, 11, 1},
                                      {3, 12, 1},
                                      {4, 7, 1},
                                      {5, 8, -1},
                                      {6, 9, -1},
                                      {7, 4, -1},
                                      {8, 5, 1},
                                      {9, 6, 1},
                                      {10, 1, -1},
                                      {11, 2, -1},
                                      {12, 3, -1},
                                      {13, 16, 1},
                                      {14, 17, -1},
                                      {15, 18, -1},
                                      {16, 13, -1},
                                      {17, 14, 1},
                                      {18, 15, 1}});
}

// --- pipeline shortcut -------------------------------------------------------

inline RootDatum analyze(const LieAlgebra& g, const std::vector<int>& torus_indices_1based = {},
                         const std::optional<std::vector<Rat>>& regular_coords = {},
                         double tol = 1e-9) {
  std::vector<Element> hint;
  for (int idx : torus_indices_1based) hint.push_back(basis_element(g, idx - 1));
  std::vector<Element> torus =
      find_maximal_torus(g, 0, hint.empty() ? nullptr : &hint);
  RootDatum datum = root_space_decomposition(g, torus, tol);
  std::optional<Element> reg;
  if (regular_coords) reg = make_element(g, *regular_coords);
  datum = choose_positive_system(datum, reg);
  return normalize_root_vectors(datum);
}

// --- random generators -------------------------------------------------------

inline Rat random_rat(Rng& rng, int numerator_bound = 4, int denominator_bound = 3) {
  std::uniform_int_distribution<int> num(-numerator_bound, numerator_bound);
  std::uniform_int_distribution<int> den(1, denominator_bound);
  return rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(Rng& rng, int numerator_bound = 4, int denominator_bound = 3) {
  for (;;) {
    Rat r = random_rat(rng, numerator_bound, denominator_bound);
    if (!is_zero(r)) return r;
  }
}

inline GRat random_nonzero_grat(Rng& rng) {
  for (;;) {
    GRat z{random_rat(rng), random_rat(rng)};
    if (!is_zero(z)) return z;
  }
}

inline Element random_element(const LieAlgebra& g, Rng& rng) {
  Element x = zero_element(g);
  for (auto& c : x.coords) c = random_rat(rng);
  return x;
}

// brackets [e1, e_j] land in span{e2..en}; Jacobi holds for any coefficients
inline LieAlgebra random_almost_abelian(Rng& rng, int dim) {
  LieAlgebra::Table t;
  for (int j = 1; j < dim; ++j) {
    LieAlgebra::Entry e;
    for (int k = 1; k < dim; ++k) {
      Rat c = random_rat(rng, 3, 2);
      if (!is_zero(c)) e.emplace_back(k, c);
    }
    if (!e.empty()) t[{0, j}] = std::move(e);
  }
  return LieAlgebra(dim, "almost_abelian", std::move(t));
}

// graded nilpotent family on 4 generators; Jacobi holds identically
inline LieAlgebra random_nilpotent4(Rng& rng) {
  LieAlgebra::Table t;
  LieAlgebra::Entry e12;
  Rat a = random_rat(rng), b = random_rat(rng);
  if (!is_zero(a)) e12.emplace_back(2, a);
  if (!is_zero(b)) e12.emplace_back(3, b);
  if (!e12.empty()) t[{0, 1}] = std::move(e12);
  Rat c = random_rat(rng);
  if (!is_zero(c)) t[{0, 2}] = {{3, c}};
  Rat d = random_rat(rng);
  if (!is_zero(d)) t[{1, 2}] = {{3, d}};
  return LieAlgebra(4, "nilpotent4", std::move(t));
}

inline QMat random_invertible(Rng& rng, int n) {
  QMat l = QMat::identity(n), u = QMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) l(i, j) = random_rat(rng, 2, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) u(i, j) = random_rat(rng, 2, 2);
  return l * u;
}

inline QMat random_matrix(Rng& rng, int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_rat(rng, 3, 2);
  return m;
}

// a genuine complex structure: conjugate of the standard block rotation
inline QMat random_complex_structure_matrix(Rng& rng, int n) {
  QMat j0(n, n);
  for (int p = 0; p + 1 < n; p += 2) {
    j0(p, p + 1) = rat(-1);
    j0(p + 1, p) = rat(1);
  }
  QMat t = random_invertible(rng, n);
  return t * j0 * *inverse(t);
}

}  // namespace samelson::testing
