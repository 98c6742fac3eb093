#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace spatial {

enum class Field { Q, Qi };

// Exact element of Q or Q(i): re + im*i with canonical GMP rationals.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT: implicit from integers is intended
  Scalar(int v) : re_(v) {}   // NOLINT
  explicit Scalar(mpq_class re, mpq_class im = 0);
  static Scalar fraction(long p, long q);
  // Accepts "p", "p/q" (and surrounding whitespace). Throws std::invalid_argument.
  static Scalar parse_rational(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(unsigned e) const;
  // max(|re|, |im|), used for discrepancy reports.
  mpq_class magnitude_bound() const;
  std::complex<double> to_complex() const;
  // "p/q" for real values, "a+bi" style otherwise (for display only).
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar factorial(unsigned n);
Scalar binomial(long n, long k);
// (x)_k = x(x-1)...(x-k+1)
Scalar falling_number(const Scalar& x, unsigned k);

}  // namespace spatial
