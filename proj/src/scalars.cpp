#include "samelson/scalars.hpp"

#include <cmath>
#include <cstdlib>

namespace samelson {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  bool seen_digit = false;
  bool seen_slash = false;
  for (size_t p = 0; p < s.size(); ++p) {
    char c = s[p];
    if (c == '-') {
      if (p != 0 && s[p - 1] != '/') throw Error("malformed rational '" + s + "'");
    } else if (c == '/') {
      if (seen_slash || !seen_digit) throw Error("malformed rational '" + s + "'");
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else {
      throw Error("malformed rational '" + s + "'");
    }
  }
  if (!seen_digit || s.back() == '/' || s.back() == '-')
    throw Error("malformed rational '" + s + "'");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw Error("malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw Error("zero denominator in rational '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& x) { return x.get_str(); }

std::string to_string(const GRat& x) {
  if (is_zero(x)) return "0";
  std::string out;
  if (!is_zero(x.re)) out = x.re.get_str();
  if (!is_zero(x.im)) {
    std::string im;
    if (x.im == 1)
      im = "i";
    else if (x.im == -1)
      im = "-i";
    else
      im = x.im.get_str() + "i";
    if (!out.empty() && im[0] != '-') out += "+";
    out += im;
  }
  return out;
}

int compare(const GRat& a, const GRat& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c;
  return cmp(a.im, b.im);
}

std::optional<Rat> snap_to_rational(double x, double tol, unsigned long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  if (std::fabs(x) <= tol) return Rat(0);

  // Convergents h/k of the continued fraction of x; accept the first one
  // within tol whose denominator respects the bound.
  mpz_class h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
  double y = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(y);
    if (std::fabs(fl) > 1e15) return std::nullopt;
    mpz_class a(static_cast<long>(fl));
    mpz_class h = a * h_prev + h_prev2;
    mpz_class k = a * k_prev + k_prev2;
    if (k > mpz_class(max_den)) return std::nullopt;
    if (sgn(k) > 0) {
      Rat cand(h, k);
      cand.canonicalize();
      if (std::fabs(x - cand.get_d()) <= tol) return cand;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    double frac = y - fl;
    if (frac < 1e-15) break;
    y = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<GRat> snap_to_gaussian(double re, double im, double tol, unsigned long max_den) {
  auto r = snap_to_rational(re, tol, max_den);
  if (!r) return std::nullopt;
  auto i = snap_to_rational(im, tol, max_den);
  if (!i) return std::nullopt;
  return GRat{*r, *i};
}

}  // namespace samelson
