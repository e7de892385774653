#include "samelson/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <map>
#include <random>

namespace samelson {

namespace {

constexpr unsigned long kMaxDenominator = 1000000;

int compare_tuples(const std::vector<GRat>& a, const std::vector<GRat>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::vector<GRat> negate_tuple(const std::vector<GRat>& a) {
  std::vector<GRat> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(-v);
  return out;
}

std::string format_tuple(const std::vector<GRat>& a) {
  std::string out = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += to_string(a[i]);
  }
  return out + ")";
}

QMat columns_matrix(const std::vector<Element>& xs, int n) {
  QMat m(n, static_cast<int>(xs.size()));
  for (size_t j = 0; j < xs.size(); ++j)
    for (int i = 0; i < n; ++i) m(i, static_cast<int>(j)) = xs[j].coords[i];
  return m;
}

void validate_torus_input(const LieAlgebra& g, const std::vector<Element>& torus) {
  if (torus.empty()) throw Error("torus basis is empty");
  for (const auto& h : torus)
    if (!same_algebra(h.algebra, &g)) throw Error("torus element belongs to another algebra");
  if (rank_of(columns_matrix(torus, g.dim())) != static_cast<int>(torus.size()))
    throw Error("torus elements are linearly dependent");
  if (!is_abelian_set(torus)) throw Error("torus is not abelian");
}

// Simultaneous eigenspaces of the commuting family, refined one operator at
// a time in floating point. Values records the eigenvalue of each operator
// refined so far on the subspace.
struct NumericalSpace {
  Eigen::MatrixXcd basis;  // orthonormal columns
  std::vector<std::complex<double>> values;
};

std::vector<NumericalSpace> refine(const std::vector<NumericalSpace>& spaces,
                                   const Eigen::MatrixXcd& op, bool record) {
  std::vector<NumericalSpace> out;
  for (const auto& space : spaces) {
    if (space.basis.cols() == 1) {
      NumericalSpace s = space;
      if (record) {
        std::complex<double> lambda =
            (space.basis.adjoint() * op * space.basis)(0, 0);
        s.values.push_back(lambda);
      }
      out.push_back(std::move(s));
      continue;
    }
    Eigen::MatrixXcd restricted = space.basis.adjoint() * op * space.basis;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(restricted);
    if (es.info() != Eigen::Success) throw Error("eigenvalue iteration failed to converge");
    const auto& lambda = es.eigenvalues();
    const auto& vecs = es.eigenvectors();
    double scale = std::max(1.0, restricted.cwiseAbs().maxCoeff());
    double eps = 1e-6 * scale;
    std::vector<int> order(lambda.size());
    for (int i = 0; i < lambda.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (std::abs(lambda[a].real() - lambda[b].real()) > eps)
        return lambda[a].real() < lambda[b].real();
      return lambda[a].imag() < lambda[b].imag();
    });
    size_t start = 0;
    while (start < order.size()) {
      size_t stop = start + 1;
      while (stop < order.size() &&
             std::abs(lambda[order[stop]] - lambda[order[start]]) <= eps)
        ++stop;
      Eigen::MatrixXcd cluster(space.basis.rows(), stop - start);
      for (size_t c = start; c < stop; ++c)
        cluster.col(static_cast<int>(c - start)) = space.basis * vecs.col(order[c]);
      // re-orthonormalize to keep later restrictions well conditioned
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(cluster);
      Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(
                                                   cluster.rows(), cluster.cols());
      NumericalSpace s;
      s.basis = std::move(q);
      s.values = space.values;
      if (record) s.values.push_back(lambda[order[start]]);
      out.push_back(std::move(s));
      start = stop;
    }
  }
  return out;
}

struct TupleKeyLess {
  bool operator()(const std::vector<GRat>& a, const std::vector<GRat>& b) const {
    return compare_tuples(a, b) < 0;
  }
};

// Exact kernel of the stacked maps (ad_{H_i} - alpha_i id) over Q(i).
std::vector<std::vector<GRat>> exact_root_space(const std::vector<CMat>& ads,
                                                const std::vector<GRat>& tuple) {
  int n = ads.front().rows();
  int k = static_cast<int>(ads.size());
  CMat stacked(k * n, n);
  for (int t = 0; t < k; ++t)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        GRat v = ads[t](r, c);
        if (r == c) v -= tuple[t];
        stacked(t * n + r, c) = v;
      }
  return kernel_basis(stacked);
}

bool is_exact_eigenvector(const std::vector<CMat>& ads, const std::vector<GRat>& tuple,
                          const std::vector<GRat>& v) {
  bool nonzero = false;
  for (const auto& c : v)
    if (!is_zero(c)) {
      nonzero = true;
      break;
    }
  if (!nonzero) return false;
  for (size_t t = 0; t < ads.size(); ++t) {
    std::vector<GRat> image = ads[t].apply(v);
    for (size_t i = 0; i < v.size(); ++i)
      if (image[i] != tuple[t] * v[i]) return false;
  }
  return true;
}

}  // namespace

GRat root_value_at(const RootDatum& datum, int root_idx, const Element& h) {
  int n = datum.algebra->dim();
  QMat torus_cols = columns_matrix(datum.torus, n);
  auto coeffs = solve(torus_cols, h.coords);
  if (!coeffs) throw Error("element does not lie in the torus span");
  GRat out(0);
  for (int i = 0; i < datum.rank(); ++i) out += GRat((*coeffs)[i]) * datum.roots[root_idx].values[i];
  return out;
}

std::vector<Element> find_maximal_torus(const LieAlgebra& g, std::uint64_t seed,
                                        const std::vector<Element>* hint) {
  VerificationItem compact = check_compact_type(g);
  if (!compact.passed)
    throw Error("find_maximal_torus: algebra '" + g.name() + "' is not of compact type (" +
                compact.certificate->detail + ")");

  if (hint) {
    validate_torus_input(g, *hint);
    std::vector<Element> cent = centralizer(g, *hint);
    if (cent.size() != hint->size()) {
      std::vector<std::vector<Rat>> span;
      for (const auto& h : *hint) span.push_back(h.coords);
      for (const auto& c : cent) {
        if (!in_span(span, c.coords)) {
          std::vector<GRat> witness(c.coords.begin(), c.coords.end());
          throw Error("torus hint is abelian but not maximal: " + format_element(witness) +
                      " centralizes it");
        }
      }
      throw Error("torus hint is not maximal");
    }
    return *hint;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Element x = zero_element(g);
    bool nonzero = false;
    for (int i = 0; i < g.dim(); ++i) {
      int c = coeff(rng);
      x.coords[i] = Rat(c);
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) continue;
    std::vector<Element> cent = centralizer(g, {x});
    if (is_abelian_set(cent)) return cent;
  }
  throw Error("find_maximal_torus: retry budget exhausted for '" + g.name() +
              "' (no regular element found in 64 samples)");
}

RootDatum root_space_decomposition(const LieAlgebra& g, std::vector<Element> torus, double tol) {
  if (tol <= 0) throw Error("root_space_decomposition: tol must be positive");
  validate_torus_input(g, torus);
  int n = g.dim();
  int k = static_cast<int>(torus.size());

  // exact zero eigenspace: the centralizer of the torus must be the torus span
  {
    std::vector<Element> cent = centralizer(g, torus);
    if (static_cast<int>(cent.size()) != k)
      throw Error("torus not maximal: its centralizer has dimension " +
                  std::to_string(cent.size()) + ", expected " + std::to_string(k));
    std::vector<std::vector<Rat>> span;
    for (const auto& h : torus) span.push_back(h.coords);
    for (const auto& c : cent)
      if (!in_span(span, c.coords))
        throw Error("torus not maximal: zero eigenspace differs from the torus span");
  }

  std::vector<QMat> ads_q;
  std::vector<CMat> ads;
  for (const auto& h : torus) {
    ads_q.push_back(ad_matrix(h));
    ads.push_back(promote(ads_q.back()));
  }

  // float stage: one generic combination to pre-split, then every ad_{H_i}
  std::vector<Eigen::MatrixXcd> ops;
  for (const auto& a : ads_q) {
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = std::complex<double>(a(r, c).get_d(), 0.0);
    ops.push_back(std::move(m));
  }
  Eigen::MatrixXcd generic = Eigen::MatrixXcd::Zero(n, n);
  for (int t = 0; t < k; ++t) generic += double(t + 1) * ops[t];

  std::vector<NumericalSpace> spaces(1);
  spaces[0].basis = Eigen::MatrixXcd::Identity(n, n);
  spaces = refine(spaces, generic, /*record=*/false);
  for (int t = 0; t < k; ++t) spaces = refine(spaces, ops[t], /*record=*/true);

  // snap every eigenvalue tuple; merge spaces that snap to the same tuple
  std::map<std::vector<GRat>, std::vector<const NumericalSpace*>, TupleKeyLess> by_tuple;
  for (const auto& space : spaces) {
    std::vector<GRat> tuple;
    for (int t = 0; t < k; ++t) {
      auto snapped =
          snap_to_gaussian(space.values[t].real(), space.values[t].imag(), tol, kMaxDenominator);
      if (!snapped)
        throw Error("cannot snap eigenvalue " + std::to_string(space.values[t].real()) +
                    (space.values[t].imag() < 0 ? "" : "+") +
                    std::to_string(space.values[t].imag()) +
                    "i to a Gaussian rational within tol=" + std::to_string(tol) +
                    " (denominator bound 10^6); root values may be irrational in this basis");
      tuple.push_back(*snapped);
    }
    by_tuple[tuple].push_back(&space);
  }

  // collect one exact root vector per (alpha, -alpha) pair
  std::vector<Root> roots;
  std::vector<CElement> vectors;
  std::vector<GRat> zero_tuple(k, GRat(0));
  for (const auto& [tuple, space_list] : by_tuple) {
    if (compare_tuples(tuple, zero_tuple) == 0) continue;
    for (const auto& v : tuple)
      if (!is_zero(v.re))
        throw Error("root value " + format_tuple(tuple) +
                    " is not purely imaginary; the algebra is not of compact type "
                    "or the torus basis is not real");
    std::vector<GRat> negated = negate_tuple(tuple);
    if (by_tuple.find(negated) == by_tuple.end())
      throw Error("root " + format_tuple(tuple) + " has no conjugate partner -" +
                  format_tuple(tuple) + "; numerical grouping failed");
    if (compare_tuples(tuple, negated) < 0) continue;  // keep the lexicographically larger rep

    // try to snap the float eigenvector, fall back to the exact kernel
    std::vector<GRat> vec;
    {
      Eigen::VectorXcd w = space_list.front()->basis.col(0);
      int lead = 0;
      double best = 0;
      for (int i = 0; i < n; ++i)
        if (std::abs(w[i]) > best) {
          best = std::abs(w[i]);
          lead = i;
        }
      Eigen::VectorXcd scaled = w / w[lead];
      std::vector<GRat> cand(n);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        auto s = snap_to_gaussian(scaled[i].real(), scaled[i].imag(), 1e-7, kMaxDenominator);
        if (!s)
          ok = false;
        else
          cand[i] = *s;
      }
      if (ok && is_exact_eigenvector(ads, tuple, cand)) vec = std::move(cand);
    }
    if (vec.empty()) {
      auto kernel = exact_root_space(ads, tuple);
      if (kernel.empty())
        throw Error("exact re-verification failed for snapped root " + format_tuple(tuple) +
                    " (numerical misgrouping, or root values irrational in this basis)");
      if (kernel.size() > 1)
        throw Error("root space for " + format_tuple(tuple) + " has dimension " +
                    std::to_string(kernel.size()) + "; torus not maximal");
      vec = std::move(kernel.front());
    }
    roots.push_back(Root{tuple, false});
    vectors.push_back(make_celement(g, std::move(vec)));
  }

  if (k + 2 * static_cast<int>(roots.size()) != n)
    throw Error("dimension count failed: rank " + std::to_string(k) + " + 2*" +
                std::to_string(roots.size()) + " root pairs != dim " + std::to_string(n));

  RootDatum datum;
  datum.algebra = &g;
  datum.torus = std::move(torus);
  datum.roots = std::move(roots);
  datum.root_vectors = std::move(vectors);
  return datum;
}

namespace {

// Small integer tuples ordered by max-norm radius, lexicographically
// descending within a radius, so (1), (1,0,-1), ... come first.
class SpiralEnumerator {
 public:
  explicit SpiralEnumerator(int k) : k_(k) {}

  // returns false when the radius budget is exhausted
  bool next(std::vector<int>& out) {
    while (radius_ <= 64) {
      if (!started_) {
        current_.assign(k_, radius_);
        started_ = true;
        if (max_abs() == radius_) {
          out = current_;
          return true;
        }
      }
      while (decrement()) {
        if (max_abs() == radius_) {
          out = current_;
          return true;
        }
      }
      ++radius_;
      started_ = false;
    }
    return false;
  }

 private:
  bool decrement() {
    for (int i = k_ - 1; i >= 0; --i) {
      if (current_[i] > -radius_) {
        --current_[i];
        for (int j = i + 1; j < k_; ++j) current_[j] = radius_;
        return true;
      }
    }
    return false;
  }
  int max_abs() const {
    int m = 0;
    for (int v : current_) m = std::max(m, std::abs(v));
    return m;
  }

  int k_;
  int radius_ = 1;
  bool started_ = false;
  std::vector<int> current_;
};

}  // namespace

RootDatum choose_positive_system(RootDatum datum, const std::optional<Element>& regular) {
  const LieAlgebra& g = *datum.algebra;
  int k = datum.rank();

  std::vector<Rat> torus_coeffs(k, Rat(0));
  Element h0 = zero_element(g);
  if (regular) {
    if (!same_algebra(regular->algebra, &g))
      throw Error("regular element belongs to another algebra");
    QMat cols = columns_matrix(datum.torus, g.dim());
    auto solved = solve(cols, regular->coords);
    if (!solved) throw Error("regular element does not lie in the torus span");
    torus_coeffs = *solved;
    h0 = *regular;
    for (int r = 0; r < datum.pair_count(); ++r) {
      GRat val(0);
      for (int i = 0; i < k; ++i) val += GRat(torus_coeffs[i]) * datum.roots[r].values[i];
      if (is_zero(val.im))
        throw Error("supplied regular element annihilates the root " +
                    format_tuple(datum.roots[r].values) + "; it is not regular");
    }
  } else {
    SpiralEnumerator spiral(k);
    std::vector<int> p;
    bool found = false;
    while (spiral.next(p)) {
      bool ok = true;
      for (int r = 0; r < datum.pair_count() && ok; ++r) {
        GRat val(0);
        for (int i = 0; i < k; ++i) val += GRat(Rat(p[i])) * datum.roots[r].values[i];
        if (is_zero(val.im)) ok = false;
      }
      if (ok) {
        for (int i = 0; i < k; ++i) torus_coeffs[i] = Rat(p[i]);
        found = true;
        break;
      }
    }
    if (!found) throw Error("no regular element found in the search budget");
    for (int i = 0; i < k; ++i) h0 = h0 + torus_coeffs[i] * datum.torus[i];
  }

  for (int r = 0; r < datum.pair_count(); ++r) {
    GRat val(0);
    for (int i = 0; i < k; ++i) val += GRat(torus_coeffs[i]) * datum.roots[r].values[i];
    if (sgn(val.im) < 0) {
      datum.roots[r].values = negate_tuple(datum.roots[r].values);
      datum.root_vectors[r] = conj(datum.root_vectors[r]);
    }
    datum.roots[r].positive = true;
  }

  // canonical order, independent of how the roots were produced
  std::vector<int> order(datum.pair_count());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return compare_tuples(datum.roots[a].values, datum.roots[b].values) < 0;
  });
  std::vector<Root> roots;
  std::vector<CElement> vectors;
  for (int idx : order) {
    roots.push_back(std::move(datum.roots[idx]));
    vectors.push_back(std::move(datum.root_vectors[idx]));
  }
  datum.roots = std::move(roots);
  datum.root_vectors = std::move(vectors);
  datum.regular = h0;
  return datum;
}

RootDatum normalize_root_vectors(RootDatum datum) {
  for (auto& v : datum.root_vectors) {
    int lead = -1;
    for (size_t i = 0; i < v.coords.size(); ++i)
      if (!is_zero(v.coords[i])) {
        lead = static_cast<int>(i);
        break;
      }
    if (lead < 0) throw Error("zero root vector");
    GRat inv = GRat(1) / v.coords[lead];
    for (auto& c : v.coords) c *= inv;
  }
  return datum;
}

VerificationItem verify_root_exactness(const RootDatum& datum) {
  const LieAlgebra& g = *datum.algebra;
  int n = g.dim();
  int k = datum.rank();
  auto fail = [](std::string detail, std::vector<int> indices = {},
                 std::vector<GRat> residual = {}) {
    Certificate cert;
    cert.indices = std::move(indices);
    cert.residual = std::move(residual);
    cert.detail = std::move(detail);
    return VerificationItem::fail("root_exactness", std::move(cert));
  };

  if (k + 2 * datum.pair_count() != n) return fail("dimension count k + 2|roots| != dim");

  std::vector<CMat> ads;
  for (const auto& h : datum.torus) ads.push_back(ad_matrix(complexify(h)));

  std::vector<GRat> zero(k, GRat(0));
  for (int r = 0; r < datum.pair_count(); ++r) {
    const auto& tuple = datum.roots[r].values;
    if (compare_tuples(tuple, zero) == 0) return fail("zero root stored", {r + 1});
    for (const auto& v : tuple)
      if (!is_zero(v.re)) return fail("root value not purely imaginary", {r + 1});
    const auto& vec = datum.root_vectors[r].coords;
    bool nonzero = false;
    for (const auto& c : vec) nonzero = nonzero || !is_zero(c);
    if (!nonzero) return fail("zero root vector", {r + 1});
    for (int t = 0; t < k; ++t) {
      std::vector<GRat> image = ads[t].apply(vec);
      std::vector<GRat> residual(n, GRat(0));
      bool bad = false;
      for (int i = 0; i < n; ++i) {
        residual[i] = image[i] - tuple[t] * vec[i];
        bad = bad || !is_zero(residual[i]);
      }
      if (bad)
        return fail("ad_H E != alpha(H) E for root " + std::to_string(r + 1) +
                        ", torus element " + std::to_string(t + 1),
                    {r + 1, t + 1}, std::move(residual));
    }
  }

  std::vector<Element> cent = centralizer(g, datum.torus);
  if (static_cast<int>(cent.size()) != k)
    return fail("zero eigenspace does not match the torus span");
  std::vector<std::vector<Rat>> span;
  for (const auto& h : datum.torus) span.push_back(h.coords);
  for (const auto& c : cent)
    if (!in_span(span, c.coords))
      return fail("zero eigenspace does not match the torus span");

  return VerificationItem::pass("root_exactness");
}

}  // namespace samelson
