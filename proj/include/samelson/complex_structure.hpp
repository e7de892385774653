#pragma once

#include <string>

#include "samelson/root_datum.hpp"
#include "samelson/tangent.hpp"

namespace samelson {

enum class Provenance { TangentSamelson, ClassicSamelson, PropositionLift, UserSupplied };

std::string to_string(Provenance p);

/// An exact rational matrix J on a real Lie algebra; builders guarantee
/// J^2 = -id, user-supplied instances are verified, not trusted.
struct ComplexStructure {
  const LieAlgebra* algebra = nullptr;
  QMat matrix;
  Provenance provenance = Provenance::UserSupplied;
};

/// Samelson-type structure on the tangent algebra of a compact-type base:
/// torus complete lifts rotate into vertical lifts, and each root plane is
/// rotated within its own lift block (the +i eigenspace is spanned by the
/// root vectors and their lifts). Expressed as an exact matrix in the
/// standard c/v coordinates.
ComplexStructure build_tangent_samelson(const TangentAlgebra& tg, const RootDatum& datum);

/// Classic Samelson structure on the base algebra itself; requires an even
/// dimensional torus, which is paired (H_1,H_2), (H_3,H_4), ...
ComplexStructure build_classic_samelson(const LieAlgebra& g, const RootDatum& datum);

/// Lift of an integrable structure from the base to the tangent algebra:
/// block diagonal diag(J, J) in c/v coordinates.
ComplexStructure lift_complex_structure(const TangentAlgebra& tg, const ComplexStructure& j);

/// Tangent Samelson structure at tower level 1, lifted level by level to k.
ComplexStructure tower_complex_structure(const Tower& tower, const RootDatum& datum, int k);

}  // namespace samelson
