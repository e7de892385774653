#pragma once

#include <memory>
#include <vector>

#include "samelson/lie_algebra.hpp"

namespace samelson {

/// The Lie algebra of the tangent Lie group of a group with algebra `base`:
/// the vector space base + base with bracket
///   [(x1,x2),(y1,y2)] = ([x1,y1], [x1,y2] + [x2,y1]).
/// Basis order is the complete lifts e_1^c..e_n^c followed by the vertical
/// lifts e_1^v..e_n^v, so complete-lift rules populate the first block and
/// the vertical block is an abelian ideal.
struct TangentAlgebra {
  LieAlgebra base;
  LieAlgebra total;

  int complete_index(int i) const { return i; }
  int vertical_index(int i) const { return base.dim() + i; }
};

/// Builds the tangent algebra; the base must pass the Jacobi scan.
TangentAlgebra tangent_algebra(const LieAlgebra& g);

Element complete_lift(const TangentAlgebra& tg, const Element& x);
Element vertical_lift(const TangentAlgebra& tg, const Element& x);
CElement complete_lift(const TangentAlgebra& tg, const CElement& x);
CElement vertical_lift(const TangentAlgebra& tg, const CElement& x);

/// Iterated tangent algebras. Level 0 is the base; level t (1-based) has
/// dimension 2^t * n. Levels are heap-allocated so element pointers into
/// them stay stable.
class Tower {
 public:
  Tower(LieAlgebra base, std::vector<std::unique_ptr<TangentAlgebra>> levels)
      : base_(std::move(base)), levels_(std::move(levels)) {}

  int depth() const { return static_cast<int>(levels_.size()); }
  const LieAlgebra& base() const { return base_; }
  const LieAlgebra& algebra_at(int level) const;
  const TangentAlgebra& tangent_at(int level) const;  // level in 1..depth()

 private:
  LieAlgebra base_;
  std::vector<std::unique_ptr<TangentAlgebra>> levels_;
};

/// Applies tangent_algebra k times. Rejects towers whose top dimension
/// would exceed dim_cap.
Tower build_tower(const LieAlgebra& g, int k, int dim_cap = 1024);

}  // namespace samelson
