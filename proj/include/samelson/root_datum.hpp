#pragma once

#include <optional>
#include <vector>

#include "samelson/lie_algebra.hpp"

namespace samelson {

/// A root as its exact value tuple (alpha(H_1), ..., alpha(H_k)) on the
/// chosen torus basis. Values are purely imaginary for compact-type input.
struct Root {
  std::vector<GRat> values;
  bool positive = false;
};

/// Exact root space decomposition data for a compact-type Lie algebra:
/// torus basis, one root per stored (alpha, -alpha) pair, and the root
/// vector E_alpha; E_{-alpha} is implicitly the conjugate. After
/// choose_positive_system the stored roots are exactly the positive system
/// and `regular` holds the regular element that split it.
struct RootDatum {
  const LieAlgebra* algebra = nullptr;
  std::vector<Element> torus;
  std::vector<Root> roots;
  std::vector<CElement> root_vectors;
  std::optional<Element> regular;

  int rank() const { return static_cast<int>(torus.size()); }
  int pair_count() const { return static_cast<int>(roots.size()); }
  bool positive_system_chosen() const { return regular.has_value(); }

  CElement negative_vector(int idx) const { return conj(root_vectors[idx]); }
};

/// alpha(h) for h in the torus span, by linearity from the stored values.
/// Throws if h does not lie in the torus span.
GRat root_value_at(const RootDatum& datum, int root_idx, const Element& h);

}  // namespace samelson
