#pragma once

#include <vector>

#include "spatial/scalar.hpp"

namespace spatial {

// Power series in one formal variable z, truncated after z^order.
class ScalarSeries {
 public:
  explicit ScalarSeries(int order);
  ScalarSeries(int order, std::vector<Scalar> coeffs);
  static ScalarSeries variable(int order);  // z

  int order() const { return order_; }
  const Scalar& operator[](int k) const { return c_.at(k); }
  Scalar& operator[](int k) { return c_.at(k); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  ScalarSeries& operator+=(const ScalarSeries& o);
  ScalarSeries& operator-=(const ScalarSeries& o);
  ScalarSeries& operator*=(const Scalar& s);
  friend ScalarSeries operator+(ScalarSeries a, const ScalarSeries& b) { return a += b; }
  friend ScalarSeries operator-(ScalarSeries a, const ScalarSeries& b) { return a -= b; }
  friend ScalarSeries operator*(ScalarSeries a, const Scalar& s) { return a *= s; }
  friend ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b);
  friend bool operator==(const ScalarSeries& a, const ScalarSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  ScalarSeries pow(unsigned e) const;

 private:
  int order_;
  std::vector<Scalar> c_;
};

ScalarSeries series_exp(const ScalarSeries& s);
ScalarSeries series_log1p(const ScalarSeries& s);
// 1/s; requires nonzero constant term.
ScalarSeries series_reciprocal(const ScalarSeries& s);

}  // namespace spatial
