#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "spatial/ground.hpp"
#include "spatial/report.hpp"
#include "spatial/symtensor.hpp"

namespace spatial {

// T_n(omega) = sum over set partitions of {1..n} of omega^{[|l_1|]} (.) ... (.) omega^{[|l_k|]}.
SymMeasure touchard_measure(const PointMeasure& omega, int n);
// sum_k S(n,k)^* omega^{(x)k}
SymMeasure touchard_via_adjoint(const PointMeasure& omega, int n);
// requires nu to be a probability measure
SymMeasure bell_measure(const PointMeasure& nu, int n);
SymMeasure ruc_measure(const PointMeasure& nu, int n);
bool is_probability(const PointMeasure& nu);

Report check_touchard_pairing(const PointMeasure& omega, const SymFn& f);
Report check_touchard_recurrence(const PointMeasure& omega, int n);
Report check_ruc_recurrence(const PointMeasure& nu, int n);
Report check_touchard_binomial(const PointMeasure& omega, const PointMeasure& sigma, int n);
Report check_touchard_genfun(const PointMeasure& omega, const PointFn& xi, int N);
// Polynomial identity in omega, additionally evaluated at each omega in points.
Report check_rho_recurrence(const PointFn& xi, int n, const std::vector<PointMeasure>& points);

// e^{-1} sum_{k=0}^{K} (1/k!) E[sum_{i in [k]^n} f(Z_{i_1}, ..., Z_{i_n})], Z_i iid with law nu.
std::complex<double> dobinski_series(const PointMeasure& nu, const SymFn& f, int K);
struct MonteCarloEstimate {
  std::complex<double> mean;
  double std_error;
  std::size_t samples;
};
// Same expectation with a Poisson(1) number of iid points, sampled.
MonteCarloEstimate dobinski_monte_carlo(const PointMeasure& nu, const SymFn& f, std::size_t samples,
                                        std::uint64_t seed);
Report dobinski_check(const PointMeasure& nu, const SymFn& f, int K, double tol);

}  // namespace spatial
