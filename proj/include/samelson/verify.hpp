#pragma once

#include "samelson/complex_structure.hpp"
#include "samelson/report.hpp"

namespace samelson {

/// N_J(x, y) = J[Jx, y] + J[x, Jy] + [x, y] - [Jx, Jy], evaluated exactly.
Element nijenhuis(const ComplexStructure& j, const Element& x, const Element& y);
CElement nijenhuis(const ComplexStructure& j, const CElement& x, const CElement& y);

/// Exact check that the matrix squares to minus the identity; the witness is
/// the first offending column.
VerificationItem verify_j_squared(const ComplexStructure& j);

/// Exact Nijenhuis scan over all unordered standard basis pairs; the witness
/// is the lexicographically first failing pair.
VerificationItem verify_integrability(const ComplexStructure& j);

/// One family of the Nijenhuis scan over the adapted complexified basis,
/// keyed by the types of the two vectors (torus/root-pair, positive/negative,
/// complete/vertical lift).
struct CaseFamilyResult {
  VerificationItem item;
  int pairs_checked = 0;
};

/// Partitions the Nijenhuis scan over the adapted basis H_i^c, E_a^c,
/// conj(E_a)^c, H_i^v, E_a^v, conj(E_a)^v into the thirteen interaction
/// families (torus vs root, sign and lift combinations), so a failure
/// localizes to one family. Empty families pass vacuously.
std::vector<CaseFamilyResult> case_suite(const TangentAlgebra& tg, const RootDatum& datum,
                                         const ComplexStructure& j);

}  // namespace samelson
