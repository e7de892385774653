#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "samelson/linalg.hpp"
#include "samelson/report.hpp"
#include "samelson/scalars.hpp"

namespace samelson {

/// A real Lie algebra given by its structure tensor over an ordered basis
/// e_1, ..., e_n. Only entries with i < j are stored (0-based internally);
/// antisymmetry supplies the rest. Immutable after construction.
class LieAlgebra {
 public:
  /// Sparse coordinates of a bracket value: list of (basis index, coefficient).
  using Entry = std::vector<std::pair<int, Rat>>;
  using Table = std::map<std::pair<int, int>, Entry>;

  LieAlgebra() = default;
  LieAlgebra(int dim, std::string name, Table table);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Table& table() const { return table_; }

  /// [e_i, e_j] as a sparse entry, any i, j (0-based).
  Entry bracket_basis(int i, int j) const;

  /// Structural equality: dimension and bracket table (names ignored).
  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && table_ == o.table_; }
  bool operator!=(const LieAlgebra& o) const { return !(*this == o); }

 private:
  int dim_ = 0;
  std::string name_;
  Table table_;
};

/// Element of a LieAlgebra with exact rational coordinates. Holds a pointer
/// to its algebra; algebras are expected to outlive their elements.
struct Element {
  const LieAlgebra* algebra = nullptr;
  std::vector<Rat> coords;
};

/// Element of the complexified algebra.
struct CElement {
  const LieAlgebra* algebra = nullptr;
  std::vector<GRat> coords;
};

Element basis_element(const LieAlgebra& g, int i);  // 0-based
Element zero_element(const LieAlgebra& g);
Element make_element(const LieAlgebra& g, std::vector<Rat> coords);
CElement make_celement(const LieAlgebra& g, std::vector<GRat> coords);
CElement complexify(const Element& x);
CElement conj(const CElement& x);

bool is_zero(const Element& x);
bool is_zero(const CElement& x);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Rat& s, const Element& a);
CElement operator+(const CElement& a, const CElement& b);
CElement operator-(const CElement& a, const CElement& b);
CElement operator*(const GRat& s, const CElement& a);

bool same_algebra(const LieAlgebra* a, const LieAlgebra* b);

Element bracket(const Element& x, const Element& y);
CElement bracket(const CElement& x, const CElement& y);

/// Matrix of ad_h = [h, .] in the standard basis (column j = coords of [h, e_j]).
QMat ad_matrix(const Element& h);
CMat ad_matrix(const CElement& h);

/// Killing form B(x, y) = trace(ad_x ad_y).
Rat killing_form(const Element& x, const Element& y);
QMat killing_matrix(const LieAlgebra& g);

/// Exhaustive Jacobi scan over basis triples i < j < k. Failure carries the
/// offending (1-based) triple and the residual element.
VerificationItem check_jacobi(const LieAlgebra& g);

/// Compact-type certificate: Killing form negative semidefinite and its
/// radical equal to the center. Failure carries either a direction of
/// positive Killing square or a radical vector that is not central.
VerificationItem check_compact_type(const LieAlgebra& g);

/// Exact basis of {x : [x, s] = 0 for all s in span}, canonical (RREF) form.
std::vector<Element> centralizer(const LieAlgebra& g, const std::vector<Element>& span);

std::vector<Element> center(const LieAlgebra& g);

bool is_abelian_set(const std::vector<Element>& xs);

/// Structure tensor expressed in the new basis given by the columns of t.
LieAlgebra change_basis(const LieAlgebra& g, const QMat& t, std::string name);

/// Direct sum with block bases; brackets between summands vanish.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name);

std::string format_element(const std::vector<GRat>& coords);

}  // namespace samelson
