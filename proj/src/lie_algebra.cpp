#include "samelson/lie_algebra.hpp"

#include <algorithm>

namespace samelson {

LieAlgebra::LieAlgebra(int dim, std::string name, Table table)
    : dim_(dim), name_(std::move(name)), table_(std::move(table)) {
  if (dim_ <= 0) throw Error("LieAlgebra: dimension must be positive");
  for (auto it = table_.begin(); it != table_.end();) {
    auto [i, j] = it->first;
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
      throw Error("LieAlgebra: bracket index out of range");
    if (i >= j) throw Error("LieAlgebra: table must be stored with i < j");
    Entry& e = it->second;
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    e.erase(std::remove_if(e.begin(), e.end(),
                           [](const auto& kv) { return samelson::is_zero(kv.second); }),
            e.end());
    for (size_t t = 0; t < e.size(); ++t) {
      if (e[t].first < 0 || e[t].first >= dim_)
        throw Error("LieAlgebra: bracket target index out of range");
      if (t > 0 && e[t].first == e[t - 1].first)
        throw Error("LieAlgebra: duplicate bracket target index");
    }
    if (e.empty())
      it = table_.erase(it);
    else
      ++it;
  }
}

LieAlgebra::Entry LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return {};
  if (!flip) return it->second;
  Entry out = it->second;
  for (auto& kv : out) kv.second = -kv.second;
  return out;
}

Element basis_element(const LieAlgebra& g, int i) {
  Element e{&g, std::vector<Rat>(g.dim(), Rat(0))};
  e.coords[i] = Rat(1);
  return e;
}

Element zero_element(const LieAlgebra& g) { return {&g, std::vector<Rat>(g.dim(), Rat(0))}; }

Element make_element(const LieAlgebra& g, std::vector<Rat> coords) {
  if (static_cast<int>(coords.size()) != g.dim())
    throw Error("element coordinate length does not match algebra dimension");
  return {&g, std::move(coords)};
}

CElement make_celement(const LieAlgebra& g, std::vector<GRat> coords) {
  if (static_cast<int>(coords.size()) != g.dim())
    throw Error("element coordinate length does not match algebra dimension");
  return {&g, std::move(coords)};
}

CElement complexify(const Element& x) {
  CElement out{x.algebra, {}};
  out.coords.reserve(x.coords.size());
  for (const auto& c : x.coords) out.coords.emplace_back(c);
  return out;
}

CElement conj(const CElement& x) {
  CElement out{x.algebra, {}};
  out.coords.reserve(x.coords.size());
  for (const auto& c : x.coords) out.coords.push_back(c.conj());
  return out;
}

bool is_zero(const Element& x) {
  for (const auto& c : x.coords)
    if (!is_zero(c)) return false;
  return true;
}

bool is_zero(const CElement& x) {
  for (const auto& c : x.coords)
    if (!is_zero(c)) return false;
  return true;
}

bool same_algebra(const LieAlgebra* a, const LieAlgebra* b) {
  if (a == b) return a != nullptr;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same(const LieAlgebra* a, const LieAlgebra* b, const char* op) {
  if (!same_algebra(a, b)) throw Error(std::string(op) + ": elements of different algebras");
}

template <class S>
std::vector<S> bracket_coords(const LieAlgebra& g, const std::vector<S>& x,
                              const std::vector<S>& y) {
  std::vector<S> out(g.dim(), S(0));
  for (const auto& [ij, entry] : g.table()) {
    auto [i, j] = ij;
    bool xi = is_zero(x[i]), xj = is_zero(x[j]);
    bool yi = is_zero(y[i]), yj = is_zero(y[j]);
    if ((xi || yj) && (xj || yi)) continue;
    S c = x[i] * y[j] - x[j] * y[i];
    if (is_zero(c)) continue;
    for (const auto& [k, v] : entry) out[k] += c * v;
  }
  return out;
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  require_same(a.algebra, b.algebra, "add");
  Element out = a;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Element operator-(const Element& a, const Element& b) {
  require_same(a.algebra, b.algebra, "sub");
  Element out = a;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

Element operator*(const Rat& s, const Element& a) {
  Element out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

CElement operator+(const CElement& a, const CElement& b) {
  require_same(a.algebra, b.algebra, "add");
  CElement out = a;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

CElement operator-(const CElement& a, const CElement& b) {
  require_same(a.algebra, b.algebra, "sub");
  CElement out = a;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
  return out;
}

CElement operator*(const GRat& s, const CElement& a) {
  CElement out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

Element bracket(const Element& x, const Element& y) {
  require_same(x.algebra, y.algebra, "bracket");
  return {x.algebra, bracket_coords(*x.algebra, x.coords, y.coords)};
}

CElement bracket(const CElement& x, const CElement& y) {
  require_same(x.algebra, y.algebra, "bracket");
  return {x.algebra, bracket_coords(*x.algebra, x.coords, y.coords)};
}

QMat ad_matrix(const Element& h) {
  const LieAlgebra& g = *h.algebra;
  QMat m(g.dim(), g.dim());
  for (const auto& [ij, entry] : g.table()) {
    auto [i, j] = ij;
    // column j += h_i * entry, column i -= h_j * entry
    if (!is_zero(h.coords[i]))
      for (const auto& [k, v] : entry) m(k, j) += h.coords[i] * v;
    if (!is_zero(h.coords[j]))
      for (const auto& [k, v] : entry) m(k, i) -= h.coords[j] * v;
  }
  return m;
}

CMat ad_matrix(const CElement& h) {
  const LieAlgebra& g = *h.algebra;
  CMat m(g.dim(), g.dim());
  for (const auto& [ij, entry] : g.table()) {
    auto [i, j] = ij;
    if (!is_zero(h.coords[i]))
      for (const auto& [k, v] : entry) m(k, j) += h.coords[i] * v;
    if (!is_zero(h.coords[j]))
      for (const auto& [k, v] : entry) m(k, i) -= h.coords[j] * v;
  }
  return m;
}

Rat killing_form(const Element& x, const Element& y) {
  require_same(x.algebra, y.algebra, "killing_form");
  QMat a = ad_matrix(x), b = ad_matrix(y);
  Rat tr(0);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) tr += a(r, c) * b(c, r);
  return tr;
}

QMat killing_matrix(const LieAlgebra& g) {
  int n = g.dim();
  std::vector<QMat> ad(n);
  for (int i = 0; i < n; ++i) ad[i] = ad_matrix(basis_element(g, i));
  QMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat tr(0);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) tr += ad[i](r, c) * ad[j](c, r);
      b(i, j) = tr;
      b(j, i) = tr;
    }
  return b;
}

VerificationItem check_jacobi(const LieAlgebra& g) {
  int n = g.dim();
  std::vector<Rat> acc(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), Rat(0));
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        const int triple[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : triple) {
          for (const auto& [m, c] : g.bracket_basis(t[0], t[1]))
            for (const auto& [p, v] : g.bracket_basis(m, t[2])) acc[p] += c * v;
        }
        bool zero = true;
        for (const auto& v : acc)
          if (!is_zero(v)) {
            zero = false;
            break;
          }
        if (!zero) {
          Certificate cert;
          cert.indices = {i + 1, j + 1, k + 1};
          cert.residual.assign(acc.begin(), acc.end());
          cert.detail = "Jacobi residual on basis triple";
          return VerificationItem::fail("jacobi", std::move(cert));
        }
      }
  return VerificationItem::pass("jacobi");
}

VerificationItem check_compact_type(const LieAlgebra& g) {
  int n = g.dim();
  QMat b = killing_matrix(g);
  CongruenceDiagonalization d = congruence_diagonalize(b);
  for (int i = 0; i < n; ++i) {
    if (sgn(d.diagonal[i]) > 0) {
      Certificate cert;
      std::vector<Rat> v = d.transform.column(i);
      cert.residual.assign(v.begin(), v.end());
      cert.detail = "Killing form is positive on this direction";
      return VerificationItem::fail("compact_type", std::move(cert));
    }
  }
  // radical directions must be central (the converse holds automatically)
  for (int i = 0; i < n; ++i) {
    if (sgn(d.diagonal[i]) != 0) continue;
    Element v{&g, d.transform.column(i)};
    if (!ad_matrix(v).is_zero_matrix()) {
      Certificate cert;
      cert.residual.assign(v.coords.begin(), v.coords.end());
      cert.detail = "Killing radical vector is not central";
      return VerificationItem::fail("compact_type", std::move(cert));
    }
  }
  return VerificationItem::pass("compact_type");
}

std::vector<Element> centralizer(const LieAlgebra& g, const std::vector<Element>& span) {
  int n = g.dim();
  if (span.empty()) {
    std::vector<Element> all;
    for (int i = 0; i < n; ++i) all.push_back(basis_element(g, i));
    return all;
  }
  QMat stacked(static_cast<int>(span.size()) * n, n);
  for (size_t s = 0; s < span.size(); ++s) {
    if (!same_algebra(span[s].algebra, &g)) throw Error("centralizer: element of another algebra");
    QMat ad = ad_matrix(span[s]);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked(static_cast<int>(s) * n + r, c) = ad(r, c);
  }
  std::vector<Element> out;
  for (auto& v : kernel_basis(stacked)) out.push_back(Element{&g, std::move(v)});
  return out;
}

std::vector<Element> center(const LieAlgebra& g) {
  std::vector<Element> all;
  for (int i = 0; i < g.dim(); ++i) all.push_back(basis_element(g, i));
  return centralizer(g, all);
}

bool is_abelian_set(const std::vector<Element>& xs) {
  for (size_t a = 0; a < xs.size(); ++a)
    for (size_t b = a + 1; b < xs.size(); ++b)
      if (!is_zero(bracket(xs[a], xs[b]))) return false;
  return true;
}

LieAlgebra change_basis(const LieAlgebra& g, const QMat& t, std::string name) {
  int n = g.dim();
  auto tinv = inverse(t);
  if (!tinv) throw Error("change_basis: transform is singular");
  LieAlgebra::Table table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Element fi{&g, t.column(i)}, fj{&g, t.column(j)};
      std::vector<Rat> br = bracket(fi, fj).coords;
      std::vector<Rat> in_new = tinv->apply(br);
      LieAlgebra::Entry entry;
      for (int k = 0; k < n; ++k)
        if (!is_zero(in_new[k])) entry.emplace_back(k, in_new[k]);
      if (!entry.empty()) table[{i, j}] = std::move(entry);
    }
  return LieAlgebra(n, std::move(name), std::move(table));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name) {
  LieAlgebra::Table table = a.table();
  int off = a.dim();
  for (const auto& [ij, entry] : b.table()) {
    LieAlgebra::Entry shifted;
    for (const auto& [k, v] : entry) shifted.emplace_back(k + off, v);
    table[{ij.first + off, ij.second + off}] = std::move(shifted);
  }
  return LieAlgebra(a.dim() + b.dim(), std::move(name), std::move(table));
}

std::string format_element(const std::vector<GRat>& coords) {
  std::string out;
  for (size_t k = 0; k < coords.size(); ++k) {
    const GRat& c = coords[k];
    if (is_zero(c)) continue;
    std::string term;
    if (c == GRat(1))
      term = "";
    else if (c == -GRat(1))
      term = "-";
    else if (c == GRat::unit_im())
      term = "i ";
    else if (c == -GRat::unit_im())
      term = "-i ";
    else
      term = "(" + to_string(c) + ") ";
    term += "e_" + std::to_string(k + 1);
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace samelson
