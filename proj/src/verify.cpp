#include "samelson/verify.hpp"

#include <array>

namespace samelson {

namespace {

void require_on(const ComplexStructure& j, const LieAlgebra* alg, const char* op) {
  if (!same_algebra(j.algebra, alg)) throw Error(std::string(op) + ": algebra mismatch");
}

}  // namespace

Element nijenhuis(const ComplexStructure& j, const Element& x, const Element& y) {
  require_on(j, x.algebra, "nijenhuis");
  require_on(j, y.algebra, "nijenhuis");
  Element jx{x.algebra, j.matrix.apply(x.coords)};
  Element jy{y.algebra, j.matrix.apply(y.coords)};
  Element term1{x.algebra, j.matrix.apply(bracket(jx, y).coords)};
  Element term2{x.algebra, j.matrix.apply(bracket(x, jy).coords)};
  return term1 + term2 + bracket(x, y) - bracket(jx, jy);
}

CElement nijenhuis(const ComplexStructure& j, const CElement& x, const CElement& y) {
  require_on(j, x.algebra, "nijenhuis");
  require_on(j, y.algebra, "nijenhuis");
  CElement jx{x.algebra, j.matrix.apply(x.coords)};
  CElement jy{y.algebra, j.matrix.apply(y.coords)};
  CElement term1{x.algebra, j.matrix.apply(bracket(jx, y).coords)};
  CElement term2{x.algebra, j.matrix.apply(bracket(x, jy).coords)};
  return term1 + term2 + bracket(x, y) - bracket(jx, jy);
}

VerificationItem verify_j_squared(const ComplexStructure& j) {
  int n = j.matrix.rows();
  QMat sq = j.matrix * j.matrix;
  QMat expected = -QMat::identity(n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (sq(r, c) != expected(r, c)) {
        Certificate cert;
        cert.indices = {c + 1};
        std::vector<GRat> residual(n);
        for (int i = 0; i < n; ++i) residual[i] = GRat(sq(i, c) - expected(i, c));
        cert.residual = std::move(residual);
        cert.detail = "J^2 + id is nonzero on this basis column";
        return VerificationItem::fail("j_squared", std::move(cert));
      }
  return VerificationItem::pass("j_squared");
}

VerificationItem verify_integrability(const ComplexStructure& j) {
  const LieAlgebra& g = *j.algebra;
  int n = g.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Element res = nijenhuis(j, basis_element(g, a), basis_element(g, b));
      if (!is_zero(res)) {
        Certificate cert;
        cert.indices = {a + 1, b + 1};
        cert.residual.assign(res.coords.begin(), res.coords.end());
        cert.detail = "Nijenhuis tensor is nonzero on this basis pair";
        return VerificationItem::fail("nijenhuis", std::move(cert));
      }
    }
  return VerificationItem::pass("nijenhuis");
}

namespace {

enum VecKind { kTorusC, kPosC, kNegC, kTorusV, kPosV, kNegV };

struct AdaptedVector {
  CElement vec;
  VecKind kind;
  std::string label;
};

// Family index (1..13) for an unordered pair of adapted vector kinds:
//   1-4  torus^c against E^c, conj^c, E^v, conj^v
//   5-8  torus^v against the same four
//   9    E^c against E^c or E^v (both positive)
//   10   vertical against vertical (any signs)
//   11   positive against negative, mixed lifts except vertical-vertical
//   12   conj^c against conj^c or conj^v
//   13   torus against torus
int family_of(VecKind a, VecKind b) {
  if (a > b) std::swap(a, b);
  if (a == kTorusC) {
    switch (b) {
      case kTorusC:
      case kTorusV: return 13;
      case kPosC: return 1;
      case kNegC: return 2;
      case kPosV: return 3;
      case kNegV: return 4;
    }
  }
  if (a == kPosC) {
    switch (b) {
      case kTorusV: return 5;
      case kPosC:
      case kPosV: return 9;
      case kNegC:
      case kNegV: return 11;
      default: break;
    }
  }
  if (a == kNegC) {
    switch (b) {
      case kTorusV: return 6;
      case kNegC:
      case kNegV: return 12;
      case kPosV: return 11;
      default: break;
    }
  }
  if (a == kTorusV) return b == kTorusV ? 13 : (b == kPosV ? 7 : 8);
  if (a == kPosV || a == kNegV) return 10;
  throw Error("unclassified adapted basis pair");
}

const std::array<const char*, 13> kFamilyNames = {
    "case01_torus_c_vs_root_c",      "case02_torus_c_vs_conj_root_c",
    "case03_torus_c_vs_root_v",      "case04_torus_c_vs_conj_root_v",
    "case05_torus_v_vs_root_c",      "case06_torus_v_vs_conj_root_c",
    "case07_torus_v_vs_root_v",      "case08_torus_v_vs_conj_root_v",
    "case09_root_c_vs_root_cv",      "case10_vertical_vs_vertical",
    "case11_root_vs_conj_root",      "case12_conj_root_c_vs_conj_root_cv",
    "case13_torus_vs_torus",
};

}  // namespace

std::vector<CaseFamilyResult> case_suite(const TangentAlgebra& tg, const RootDatum& datum,
                                         const ComplexStructure& j) {
  require_on(j, &tg.total, "case_suite");
  if (!same_algebra(datum.algebra, &tg.base))
    throw Error("case_suite: datum does not describe the base algebra");

  std::vector<AdaptedVector> basis;
  auto add = [&](CElement v, VecKind kind, std::string label) {
    basis.push_back(AdaptedVector{std::move(v), kind, std::move(label)});
  };
  for (int i = 0; i < datum.rank(); ++i)
    add(complete_lift(tg, complexify(datum.torus[i])), kTorusC, "H_" + std::to_string(i + 1) + "^c");
  for (int r = 0; r < datum.pair_count(); ++r)
    add(complete_lift(tg, datum.root_vectors[r]), kPosC, "E_" + std::to_string(r + 1) + "^c");
  for (int r = 0; r < datum.pair_count(); ++r)
    add(complete_lift(tg, datum.negative_vector(r)), kNegC, "E_-" + std::to_string(r + 1) + "^c");
  for (int i = 0; i < datum.rank(); ++i)
    add(vertical_lift(tg, complexify(datum.torus[i])), kTorusV, "H_" + std::to_string(i + 1) + "^v");
  for (int r = 0; r < datum.pair_count(); ++r)
    add(vertical_lift(tg, datum.root_vectors[r]), kPosV, "E_" + std::to_string(r + 1) + "^v");
  for (int r = 0; r < datum.pair_count(); ++r)
    add(vertical_lift(tg, datum.negative_vector(r)), kNegV, "E_-" + std::to_string(r + 1) + "^v");

  std::vector<CaseFamilyResult> results(13);
  for (int f = 0; f < 13; ++f) results[f].item = VerificationItem::pass(kFamilyNames[f]);

  int total = static_cast<int>(basis.size());
  for (int a = 0; a < total; ++a)
    for (int b = a + 1; b < total; ++b) {
      int family = family_of(basis[a].kind, basis[b].kind) - 1;
      CaseFamilyResult& res = results[family];
      ++res.pairs_checked;
      if (!res.item.passed) continue;  // keep the first witness per family
      CElement val = nijenhuis(j, basis[a].vec, basis[b].vec);
      if (!is_zero(val)) {
        Certificate cert;
        cert.indices = {a + 1, b + 1};
        cert.residual = val.coords;
        cert.detail = "N_J(" + basis[a].label + ", " + basis[b].label + ") != 0";
        res.item = VerificationItem::fail(kFamilyNames[family], std::move(cert));
      }
    }
  return results;
}

}  // namespace samelson
