#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace samelson {

/// Error raised by construction/verification routines on invalid or
/// inconsistent mathematical input. The CLI maps it to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Always canonical (lowest terms, positive denominator).
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (base 10). Throws Error on anything else.
Rat parse_rat(const std::string& s);

std::string to_string(const Rat& x);

/// Element of Q(i); the exact scalar field of the complexified algebra.
struct GaussianRational {
  Rat re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int v) : re(v), im(0) {}  // NOLINT: implicit by design
  GaussianRational(Rat r) : re(std::move(r)), im(0) {}
  GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_im() { return {Rat(0), Rat(1)}; }

  GaussianRational conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    Rat n = o.norm();
    if (sgn(n) == 0) throw Error("GaussianRational: division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

using GRat = GaussianRational;

inline GRat operator*(const GRat& a, const Rat& b) { return {a.re * b, a.im * b}; }
inline GRat operator*(const Rat& a, const GRat& b) { return b * a; }

inline bool is_zero(const GRat& x) { return is_zero(x.re) && is_zero(x.im); }

/// "0", "1", "-i", "1/2+3i", "1-2/3i"; used by the text report.
std::string to_string(const GRat& x);

/// Total order used for canonical sorting: compare (re, im) lexicographically.
int compare(const GRat& a, const GRat& b);

/// Continued-fraction reconstruction: nearest p/q with q <= max_den and
/// |x - p/q| <= tol, or nullopt if no convergent qualifies.
std::optional<Rat> snap_to_rational(double x, double tol, unsigned long max_den);

/// Snaps real and imaginary parts independently.
std::optional<GRat> snap_to_gaussian(double re, double im, double tol, unsigned long max_den);

}  // namespace samelson
