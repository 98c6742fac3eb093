#include "spatial/touchard.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "spatial/partition.hpp"
#include "spatial/poisson.hpp"
#include "spatial/polyop.hpp"
#include "spatial/random.hpp"
#include "spatial/series.hpp"
#include "spatial/stirling.hpp"

namespace spatial {

SymMeasure touchard_measure(const PointMeasure& omega, int n) {
  if (n < 0) throw std::invalid_argument("negative order");
  const int m = omega.m();
  if (n == 0) return SymMeasure::constant(m, 0, Scalar(1));
  std::map<std::vector<int>, long> shapes;
  for_each_set_partition(n, -1, [&](const std::vector<int>& rgs) { ++shapes[rgs_shape(rgs)]; });
  SymMeasure out(m, n);
  for (const auto& [shape, count] : shapes) {
    SymMeasure term = diag_measure(omega, shape.front());
    for (std::size_t j = 1; j < shape.size(); ++j) term = sym_product_measure(term, diag_measure(omega, shape[j]));
    out += term * Scalar(count);
  }
  return out;
}

SymMeasure touchard_via_adjoint(const PointMeasure& omega, int n) {
  if (n == 0) return SymMeasure::constant(omega.m(), 0, Scalar(1));
  SymMeasure out(omega.m(), n);
  for (int k = 1; k <= n; ++k) out += adjoint_apply(OperatorKind::S2, n, k, power_measure(omega, k));
  return out;
}

bool is_probability(const PointMeasure& nu) {
  Scalar total(0);
  for (const auto& w : nu.w) {
    if (!w.is_real() || sgn(w.re()) < 0) return false;
    total += w;
  }
  return total == Scalar(1);
}

SymMeasure bell_measure(const PointMeasure& nu, int n) {
  if (!is_probability(nu)) throw std::invalid_argument("Bell measure needs a probability measure");
  return touchard_measure(nu, n);
}

SymMeasure ruc_measure(const PointMeasure& nu, int n) { return touchard_measure(-nu, n); }

Report check_touchard_pairing(const PointMeasure& omega, const SymFn& f) {
  Report r("touchard_pairing");
  const int n = f.rank();
  SymMeasure t = touchard_measure(omega, n);
  r.expect_equal(t, touchard_via_adjoint(omega, n), "explicit T_n = adjoint T_n");
  Scalar via_S = (n == 0) ? f[0] : Scalar(0);
  for (int k = 1; k <= n; ++k) via_S += pair(power_measure(omega, k), apply_operator(OperatorKind::S2, n, k, f));
  Scalar tp = pair(t, f);
  r.expect_equal(tp, via_S, "<T_n, f> = sum <omega^k, S f>");
  r.expect_equal(tp, poisson_expect(omega, GradedFn::monomial(f)), "<T_n, f> = E <.^n, f>");
  return r;
}

Report check_touchard_recurrence(const PointMeasure& omega, int n) {
  Report r("touchard_recurrence");
  SymMeasure rhs(omega.m(), n + 1);
  for (int k = 0; k <= n; ++k)
    rhs += sym_product_measure(touchard_measure(omega, k), diag_measure(omega, n + 1 - k)) * binomial(n, k);
  r.expect_equal(touchard_measure(omega, n + 1), rhs, "T_{n+1} recurrence n=" + std::to_string(n));
  return r;
}

Report check_ruc_recurrence(const PointMeasure& nu, int n) {
  Report r("ruc_recurrence");
  SymMeasure rhs(nu.m(), n + 1);
  for (int k = 0; k <= n; ++k)
    rhs -= sym_product_measure(ruc_measure(nu, k), diag_measure(nu, n + 1 - k)) * binomial(n, k);
  r.expect_equal(ruc_measure(nu, n + 1), rhs, "D_{n+1} recurrence n=" + std::to_string(n));
  return r;
}

Report check_touchard_binomial(const PointMeasure& omega, const PointMeasure& sigma, int n) {
  Report r("touchard_binomial");
  SymMeasure rhs(omega.m(), n);
  for (int k = 0; k <= n; ++k)
    rhs += sym_product_measure(touchard_measure(omega, k), touchard_measure(sigma, n - k)) * binomial(n, k);
  r.expect_equal(touchard_measure(omega + sigma, n), rhs, "T_n binomial n=" + std::to_string(n));
  return r;
}

Report check_touchard_genfun(const PointMeasure& omega, const PointFn& xi, int N) {
  if (N < 1) throw std::invalid_argument("order must be >= 1");
  Report r("touchard_genfun");
  ScalarSeries lhs(N), exponent(N);
  for (int n = 0; n <= N; ++n)
    lhs[n] = pair(touchard_measure(omega, n), power_fn(xi, n)) / factorial(static_cast<unsigned>(n));
  for (int i = 1; i <= N; ++i)
    exponent[i] = integrate(omega, pointwise_pow(xi, static_cast<unsigned>(i))) / factorial(static_cast<unsigned>(i));
  r.expect_equal(lhs, series_exp(exponent), "Touchard generating function");
  return r;
}

// omega -> <T_n(omega), xi^n> as a polynomial
static GradedFn touchard_polynomial(const PointFn& xi, int n) {
  GradedFn q(xi.m(), n);
  if (n == 0) {
    q[0][0] = Scalar(1);
    return q;
  }
  SymFn f = power_fn(xi, n);
  for (int k = 1; k <= n; ++k) q[k] = apply_operator(OperatorKind::S2, n, k, f);
  return q;
}

Report check_rho_recurrence(const PointFn& xi, int n, const std::vector<PointMeasure>& points) {
  Report r("rho_recurrence");
  GradedFn q = touchard_polynomial(xi, n);
  GradedFn next = euler_op(xi, q) + multiply_polynomials(GradedFn::monomial(as_symfn(xi)), q);
  r.expect_equal(touchard_polynomial(xi, n + 1), next, "<omega, xi(d+1)> recurrence n=" + std::to_string(n));
  for (const auto& omega : points)
    r.expect_equal(pair(touchard_measure(omega, n + 1), power_fn(xi, n + 1)), eval_polynomial(next, omega),
                   "rho recurrence at omega n=" + std::to_string(n));
  return r;
}

// M_j = sum over set partitions pi of {1..n} with j blocks of <nu^{(x)j}, D_pi f>
static std::vector<Scalar> kernel_moments(const PointMeasure& nu, const SymFn& f) {
  const int n = f.rank();
  std::vector<Scalar> M(static_cast<std::size_t>(n) + 1, Scalar(0));
  if (n == 0) {
    M[0] = f[0];
    return M;
  }
  for_each_set_partition(n, -1, [&](const std::vector<int>& rgs) {
    auto blocks = rgs_to_blocks(rgs);
    M[blocks.size()] += pair(power_measure(nu, static_cast<int>(blocks.size())), diag_partition(f, blocks));
  });
  return M;
}

std::complex<double> dobinski_series(const PointMeasure& nu, const SymFn& f, int K) {
  if (!is_probability(nu)) throw std::invalid_argument("Dobinski check needs a probability measure");
  if (K < 0) throw std::invalid_argument("negative truncation");
  std::vector<Scalar> M = kernel_moments(nu, f);
  std::vector<std::complex<double>> Md;
  for (const auto& v : M) Md.push_back(v.to_complex());
  // E_k / k! = sum_j (k)_j M_j / k! = sum_{j <= k} M_j / (k-j)!
  std::vector<double> inv_fact(static_cast<std::size_t>(K) + 1, 1.0);
  for (int a = 1; a <= K; ++a) inv_fact[static_cast<std::size_t>(a)] = inv_fact[static_cast<std::size_t>(a) - 1] / a;
  std::complex<double> total = 0.0;
  for (int k = 0; k <= K; ++k) {
    std::complex<double> term = 0.0;
    for (int j = 0; j <= std::min<int>(k, static_cast<int>(Md.size()) - 1); ++j)
      term += Md[static_cast<std::size_t>(j)] * inv_fact[static_cast<std::size_t>(k - j)];
    total += term;
  }
  return std::exp(-1.0) * total;
}

MonteCarloEstimate dobinski_monte_carlo(const PointMeasure& nu, const SymFn& f, std::size_t samples,
                                        std::uint64_t seed) {
  if (!is_probability(nu)) throw std::invalid_argument("Dobinski check needs a probability measure");
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  const int m = nu.m();
  std::vector<double> cdf;
  double acc = 0.0;
  for (Label x = 0; x < m; ++x) cdf.push_back(acc += nu[x].re().get_d());
  std::vector<std::complex<double>> weighted;
  const auto& b = f.basis();
  for (std::size_t i = 0; i < f.size(); ++i) weighted.push_back((b.perm_count(i) * f[i]).to_complex());
  Rng rng(seed);
  std::complex<double> sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    // N ~ Poisson(1) by inversion
    double u = rng.uniform01(), p = std::exp(-1.0), c = p;
    int N = 0;
    while (u > c && N < 200) {
      ++N;
      p /= N;
      c += p;
    }
    Counts eta(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < N; ++i) {
      double v = rng.uniform01() * acc;
      Label x = 0;
      while (x < m - 1 && v >= cdf[static_cast<std::size_t>(x)]) ++x;
      ++eta[static_cast<std::size_t>(x)];
    }
    std::complex<double> val = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      double mono = 1.0;
      for (Label x : b.at(i)) mono *= eta[static_cast<std::size_t>(x)];
      val += weighted[i] * mono;
    }
    sum += val;
    sum_sq += std::norm(val);
  }
  double cnt = static_cast<double>(samples);
  std::complex<double> mean = sum / cnt;
  double var = (sum_sq - cnt * std::norm(mean)) / (cnt - 1.0);
  return {mean, std::sqrt(std::max(var, 0.0) / cnt), samples};
}

Report dobinski_check(const PointMeasure& nu, const SymFn& f, int K, double tol) {
  Report r("dobinski");
  std::complex<double> exact = pair(bell_measure(nu, f.rank()), f).to_complex();
  r.expect_close(dobinski_series(nu, f, K), exact, tol, "Dobinski series n=" + std::to_string(f.rank()));
  return r;
}

}  // namespace spatial
