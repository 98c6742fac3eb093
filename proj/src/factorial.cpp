#include "spatial/factorial.hpp"

#include <stdexcept>

#include "spatial/series.hpp"

namespace spatial {

static Scalar ordered_mass(const PointMeasure& omega, const std::vector<Label>& tuple, int sign) {
  Scalar p(1);
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    long prior = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (tuple[j] == tuple[k]) ++prior;
    p *= omega[tuple[k]] + Scalar(sign * prior);
  }
  return p;
}

Scalar falling_ordered_mass(const PointMeasure& omega, const std::vector<Label>& tuple) {
  return ordered_mass(omega, tuple, -1);
}

Scalar rising_ordered_mass(const PointMeasure& omega, const std::vector<Label>& tuple) {
  return ordered_mass(omega, tuple, +1);
}

static SymMeasure factorial_measure(const PointMeasure& omega, int n, int sign) {
  if (n < 0) throw std::invalid_argument("negative order");
  SymMeasure r(omega.m(), n);
  const auto& b = r.basis();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ordered_mass(omega, b.at(i), sign);
  return r;
}

SymMeasure falling(const PointMeasure& omega, int n) { return factorial_measure(omega, n, -1); }
SymMeasure rising(const PointMeasure& omega, int n) { return factorial_measure(omega, n, +1); }

SymMeasure binom_measure(const PointMeasure& omega, int n) {
  return falling(omega, n) * (Scalar(1) / factorial(static_cast<unsigned>(n)));
}

Report check_binomial(const PointMeasure& omega, const PointMeasure& sigma, int n) {
  if (omega.m() != sigma.m()) throw std::invalid_argument("ground set mismatch");
  Report r("binomial");
  const int m = omega.m();
  SymMeasure fall(m, n), rise(m, n);
  for (int k = 0; k <= n; ++k) {
    Scalar c = binomial(n, k);
    fall += sym_product_measure(falling(omega, k), falling(sigma, n - k)) * c;
    rise += sym_product_measure(rising(omega, k), rising(sigma, n - k)) * c;
  }
  r.expect_equal(falling(omega + sigma, n), fall, "falling binomial");
  r.expect_equal(rising(omega + sigma, n), rise, "rising binomial");
  return r;
}

Report check_lowering(const PointMeasure& omega, Label x, int n) {
  if (n < 1) throw std::invalid_argument("lowering needs n >= 1");
  if (x < 0 || x >= omega.m()) throw std::out_of_range("label out of range");
  Report r("lowering");
  const PointMeasure d = delta(omega.m(), x);
  const SymMeasure dx = as_symmeasure(d);
  r.expect_equal(falling(omega + d, n) - falling(omega, n),
                 sym_product_measure(dx, falling(omega, n - 1)) * Scalar(n), "falling lowering");
  r.expect_equal(rising(omega, n) - rising(omega - d, n),
                 sym_product_measure(dx, rising(omega, n - 1)) * Scalar(n), "rising lowering");
  return r;
}

Report check_recurrence(const PointMeasure& omega, const PointFn& xi, int n) {
  if (n < 1) throw std::invalid_argument("recurrence needs n >= 1");
  Report r("recurrence");
  Scalar lhs = pair(falling(omega, n + 1), power_fn(xi, n + 1));
  SymFn mixed = sym_product_fn(as_symfn(pointwise_pow(xi, 2)), power_fn(xi, n - 1));
  Scalar rhs = pair(falling(omega, n), power_fn(xi, n)) * integrate(omega, xi) -
               Scalar(n) * pair(falling(omega, n), mixed);
  r.expect_equal(lhs, rhs, "falling recurrence n=" + std::to_string(n));
  return r;
}

Report check_genfun_factorial(const PointMeasure& omega, const PointFn& xi, int N) {
  if (N < 1) throw std::invalid_argument("order must be >= 1");
  Report r("genfun_factorial");
  ScalarSeries lf(N), lr(N), af(N), ar(N);
  for (int n = 0; n <= N; ++n) {
    Scalar inv = Scalar(1) / factorial(static_cast<unsigned>(n));
    SymFn probe = power_fn(xi, n);
    lf[n] = pair(falling(omega, n), probe) * inv;
    lr[n] = pair(rising(omega, n), probe) * inv;
  }
  // <omega, log(1 + z xi)> and <omega, -log(1 - z xi)>
  for (int i = 1; i <= N; ++i) {
    Scalar moment = integrate(omega, pointwise_pow(xi, static_cast<unsigned>(i))) / Scalar(i);
    af[i] = (i % 2 == 1) ? moment : -moment;
    ar[i] = moment;
  }
  r.expect_equal(lf, series_exp(af), "falling generating function");
  r.expect_equal(lr, series_exp(ar), "rising generating function");
  return r;
}

}  // namespace spatial
