#include "samelson/tangent.hpp"

namespace samelson {

TangentAlgebra tangent_algebra(const LieAlgebra& g) {
  VerificationItem jacobi = check_jacobi(g);
  if (!jacobi.passed) {
    const auto& idx = jacobi.certificate->indices;
    throw Error("tangent_algebra: base algebra '" + g.name() + "' fails the Jacobi identity at (" +
                std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                std::to_string(idx[2]) + ")");
  }
  int n = g.dim();
  LieAlgebra::Table table;
  for (const auto& [ij, entry] : g.table()) {
    auto [i, j] = ij;
    // [e_i^c, e_j^c] = [e_i, e_j]^c
    table[{i, j}] = entry;
    // [e_i^c, e_j^v] = [e_i, e_j]^v and [e_j^c, e_i^v] = -[e_i, e_j]^v
    LieAlgebra::Entry lifted;
    for (const auto& [k, v] : entry) lifted.emplace_back(n + k, v);
    table[{i, n + j}] = lifted;
    for (auto& kv : lifted) kv.second = -kv.second;
    table[{j, n + i}] = std::move(lifted);
    // [e^v, e^v] = 0: nothing stored
  }
  LieAlgebra total(2 * n, "T(" + g.name() + ")", std::move(table));
  return TangentAlgebra{g, std::move(total)};
}

Element complete_lift(const TangentAlgebra& tg, const Element& x) {
  if (!same_algebra(x.algebra, &tg.base)) throw Error("complete_lift: element not in the base");
  Element out = zero_element(tg.total);
  for (int i = 0; i < tg.base.dim(); ++i) out.coords[tg.complete_index(i)] = x.coords[i];
  return out;
}

Element vertical_lift(const TangentAlgebra& tg, const Element& x) {
  if (!same_algebra(x.algebra, &tg.base)) throw Error("vertical_lift: element not in the base");
  Element out = zero_element(tg.total);
  for (int i = 0; i < tg.base.dim(); ++i) out.coords[tg.vertical_index(i)] = x.coords[i];
  return out;
}

CElement complete_lift(const TangentAlgebra& tg, const CElement& x) {
  if (!same_algebra(x.algebra, &tg.base)) throw Error("complete_lift: element not in the base");
  CElement out = make_celement(tg.total, std::vector<GRat>(tg.total.dim(), GRat(0)));
  for (int i = 0; i < tg.base.dim(); ++i) out.coords[tg.complete_index(i)] = x.coords[i];
  return out;
}

CElement vertical_lift(const TangentAlgebra& tg, const CElement& x) {
  if (!same_algebra(x.algebra, &tg.base)) throw Error("vertical_lift: element not in the base");
  CElement out = make_celement(tg.total, std::vector<GRat>(tg.total.dim(), GRat(0)));
  for (int i = 0; i < tg.base.dim(); ++i) out.coords[tg.vertical_index(i)] = x.coords[i];
  return out;
}

const LieAlgebra& Tower::algebra_at(int level) const {
  if (level == 0) return base_;
  return tangent_at(level).total;
}

const TangentAlgebra& Tower::tangent_at(int level) const {
  if (level < 1 || level > depth()) throw Error("tower level out of range");
  return *levels_[level - 1];
}

Tower build_tower(const LieAlgebra& g, int k, int dim_cap) {
  if (k < 1) throw Error("build_tower: k must be >= 1");
  long top_dim = static_cast<long>(g.dim());
  for (int t = 0; t < k; ++t) {
    top_dim *= 2;
    if (top_dim > dim_cap)
      throw Error("build_tower: level " + std::to_string(k) + " has dimension " +
                  std::to_string(static_cast<long>(g.dim()) << k) + ", exceeding the cap of " +
                  std::to_string(dim_cap));
  }
  std::vector<std::unique_ptr<TangentAlgebra>> levels;
  const LieAlgebra* current = &g;
  for (int t = 0; t < k; ++t) {
    levels.push_back(std::make_unique<TangentAlgebra>(tangent_algebra(*current)));
    current = &levels.back()->total;
  }
  return Tower(g, std::move(levels));
}

}  // namespace samelson
