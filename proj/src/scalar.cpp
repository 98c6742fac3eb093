#include "spatial/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace spatial {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  mpq_class v;
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed rational: " + s);
    v = mpq_class(mpz_class(s, 10));
  } else {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q) || q[0] == '-')
      throw std::invalid_argument("malformed rational: " + s);
    mpz_class den(q, 10);
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    v = mpq_class(mpz_class(p, 10), den);
    v.canonicalize();
  }
  return Scalar(v);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-re_), mpq_class(-im_)); }

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1), base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

mpq_class Scalar::magnitude_bound() const {
  mpq_class a = abs(re_), b = abs(im_);
  return a < b ? b : a;
}

std::complex<double> Scalar::to_complex() const { return {re_.get_d(), im_.get_d()}; }

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out = sgn(re_) == 0 ? "" : re_.get_str();
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  out += im_.get_str() + "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Scalar(mpq_class(r));
}

Scalar binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(mpq_class(r));
}

Scalar falling_number(const Scalar& x, unsigned k) {
  Scalar r(1);
  for (unsigned j = 0; j < k; ++j) r *= x - Scalar(static_cast<long>(j));
  return r;
}

}  // namespace spatial
