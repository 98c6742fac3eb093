#include "spatial/series.hpp"

#include <stdexcept>

namespace spatial {

ScalarSeries::ScalarSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.assign(static_cast<std::size_t>(order) + 1, Scalar(0));
}

ScalarSeries::ScalarSeries(int order, std::vector<Scalar> coeffs) : ScalarSeries(order) {
  if (coeffs.size() > c_.size()) throw std::invalid_argument("too many series coefficients");
  for (std::size_t k = 0; k < coeffs.size(); ++k) c_[k] = std::move(coeffs[k]);
}

ScalarSeries ScalarSeries::variable(int order) {
  ScalarSeries s(order);
  if (order >= 1) s[1] = Scalar(1);
  return s;
}

static void require_same_order(const ScalarSeries& a, const ScalarSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
}

ScalarSeries& ScalarSeries::operator+=(const ScalarSeries& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

ScalarSeries& ScalarSeries::operator-=(const ScalarSeries& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

ScalarSeries& ScalarSeries::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b) {
  require_same_order(a, b);
  ScalarSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

ScalarSeries ScalarSeries::pow(unsigned e) const {
  ScalarSeries r(order_);
  r[0] = Scalar(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

// E = exp(s) solves E' = s'E, i.e. k E_k = sum_{j=1}^k j s_j E_{k-j}.
ScalarSeries series_exp(const ScalarSeries& s) {
  if (!s[0].is_zero()) throw std::domain_error("series_exp needs zero constant term");
  ScalarSeries e(s.order());
  e[0] = Scalar(1);
  for (int k = 1; k <= s.order(); ++k) {
    Scalar acc(0);
    for (int j = 1; j <= k; ++j) acc += Scalar(j) * s[j] * e[k - j];
    e[k] = acc / Scalar(k);
  }
  return e;
}

ScalarSeries series_reciprocal(const ScalarSeries& s) {
  if (s[0].is_zero()) throw std::domain_error("series_reciprocal needs nonzero constant term");
  ScalarSeries r(s.order());
  r[0] = Scalar(1) / s[0];
  for (int k = 1; k <= s.order(); ++k) {
    Scalar acc(0);
    for (int j = 1; j <= k; ++j) acc += s[j] * r[k - j];
    r[k] = -acc * r[0];
  }
  return r;
}

// L = log(1+s) solves L' = s'/(1+s).
ScalarSeries series_log1p(const ScalarSeries& s) {
  if (!s[0].is_zero()) throw std::domain_error("series_log1p needs zero constant term");
  ScalarSeries one_plus = s;
  one_plus[0] = Scalar(1);
  ScalarSeries deriv(s.order());
  for (int k = 1; k <= s.order(); ++k) deriv[k - 1] = Scalar(k) * s[k];
  ScalarSeries q = deriv * series_reciprocal(one_plus);
  ScalarSeries out(s.order());
  for (int k = 1; k <= s.order(); ++k) out[k] = q[k - 1] / Scalar(k);
  return out;
}

}  // namespace spatial
