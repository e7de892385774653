#include "samelson/complex_structure.hpp"

namespace samelson {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::TangentSamelson: return "tangent-samelson";
    case Provenance::ClassicSamelson: return "classic-samelson";
    case Provenance::PropositionLift: return "proposition-lift";
    case Provenance::UserSupplied: return "user-supplied";
  }
  return "?";
}

namespace {

// Columns H_1..H_k, X_1, Y_1, ..., X_m, Y_m: the adapted real basis built
// from the torus and the real/imaginary parts of the root vectors.
QMat adapted_basis(const RootDatum& datum) {
  const LieAlgebra& g = *datum.algebra;
  int n = g.dim();
  int k = datum.rank();
  QMat p(n, n);
  if (k + 2 * datum.pair_count() != n)
    throw Error("root datum dimension count does not match the algebra");
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) p(i, j) = datum.torus[j].coords[i];
  for (int r = 0; r < datum.pair_count(); ++r)
    for (int i = 0; i < n; ++i) {
      p(i, k + 2 * r) = datum.root_vectors[r].coords[i].re;
      p(i, k + 2 * r + 1) = datum.root_vectors[r].coords[i].im;
    }
  return p;
}

// Rotation of each root plane in adapted coordinates: X_j -> -Y_j, Y_j -> X_j.
QMat root_rotation_adapted(int n, int k, int pairs) {
  QMat s(n, n);
  for (int r = 0; r < pairs; ++r) {
    s(k + 2 * r + 1, k + 2 * r) = Rat(-1);
    s(k + 2 * r, k + 2 * r + 1) = Rat(1);
  }
  return s;
}

void require_datum_ready(const RootDatum& datum) {
  if (!datum.positive_system_chosen())
    throw Error("root datum has no positive system; run choose_positive_system first");
}

}  // namespace

ComplexStructure build_tangent_samelson(const TangentAlgebra& tg, const RootDatum& datum) {
  require_datum_ready(datum);
  if (!same_algebra(datum.algebra, &tg.base))
    throw Error("build_tangent_samelson: datum does not describe the base algebra");
  int n = tg.base.dim();
  int k = datum.rank();

  QMat p = adapted_basis(datum);
  auto p_inv = inverse(p);
  if (!p_inv)
    throw Error("degenerate root vectors: torus and root planes do not span the algebra");

  QMat s_ad = root_rotation_adapted(n, k, datum.pair_count());
  QMat d_ad(n, n);
  for (int j = 0; j < k; ++j) d_ad(j, j) = Rat(1);

  QMat s = p * s_ad * *p_inv;  // rotates root planes, kills the torus
  QMat d = p * d_ad * *p_inv;  // projection onto the torus along root planes

  QMat j(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      j(r, c) = s(r, c);          // c-block rotation
      j(n + r, n + c) = s(r, c);  // v-block rotation
      j(r, n + c) = -d(r, c);     // torus v -> -c
      j(n + r, c) = d(r, c);      // torus c -> v
    }
  return ComplexStructure{&tg.total, std::move(j), Provenance::TangentSamelson};
}

ComplexStructure build_classic_samelson(const LieAlgebra& g, const RootDatum& datum) {
  require_datum_ready(datum);
  if (!same_algebra(datum.algebra, &g))
    throw Error("build_classic_samelson: datum does not describe this algebra");
  int n = g.dim();
  int k = datum.rank();
  if (k % 2 != 0)
    throw Error("maximal torus dimension " + std::to_string(k) +
                " is odd: the algebra admits no almost complex structure");

  QMat p = adapted_basis(datum);
  auto p_inv = inverse(p);
  if (!p_inv)
    throw Error("degenerate root vectors: torus and root planes do not span the algebra");

  QMat j_ad = root_rotation_adapted(n, k, datum.pair_count());
  for (int t = 0; t + 1 < k; t += 2) {
    j_ad(t + 1, t) = Rat(1);   // H_{2j-1} -> H_{2j}
    j_ad(t, t + 1) = Rat(-1);  // H_{2j}   -> -H_{2j-1}
  }
  return ComplexStructure{&g, p * j_ad * *p_inv, Provenance::ClassicSamelson};
}

ComplexStructure lift_complex_structure(const TangentAlgebra& tg, const ComplexStructure& j) {
  if (!same_algebra(j.algebra, &tg.base))
    throw Error("lift_complex_structure: structure does not live on the base algebra");
  int n = tg.base.dim();
  if (j.matrix * j.matrix != -QMat::identity(n))
    throw Error("lift_complex_structure: J^2 != -id on the base");
  QMat out(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      out(r, c) = j.matrix(r, c);
      out(n + r, n + c) = j.matrix(r, c);
    }
  return ComplexStructure{&tg.total, std::move(out), Provenance::PropositionLift};
}

ComplexStructure tower_complex_structure(const Tower& tower, const RootDatum& datum, int k) {
  if (k < 1) throw Error("tower_complex_structure: k must be >= 1");
  if (k > tower.depth()) throw Error("tower_complex_structure: tower is too shallow");
  ComplexStructure j = build_tangent_samelson(tower.tangent_at(1), datum);
  for (int level = 2; level <= k; ++level)
    j = lift_complex_structure(tower.tangent_at(level), j);
  return j;
}

}  // namespace samelson
