#pragma once

#include <complex>
#include <set>
#include <vector>

#include "spatial/ground.hpp"
#include "spatial/report.hpp"
#include "spatial/symtensor.hpp"

namespace spatial {

// E_omega(p) = sum_n sum_k <omega^{(x)k}, S(n,k) f^(n)>.
Scalar poisson_expect(const PointMeasure& omega, const GradedFn& p);
// Finite formula over Lambda (default: whole ground set):
// sum_i (1/i!) int_{Lambda^i} p([x]) omega^{(x)i} * sum_{k <= n-i} (-omega(Lambda))^k / k!.
Scalar poisson_expect_finite(const PointMeasure& omega, const GradedFn& p);
Scalar poisson_expect_finite(const PointMeasure& omega, const GradedFn& p, const std::set<Label>& lambda);
// e^{-omega(X)} sum_{n <= K} (1/n!) int p([x_1..x_n]) omega^{(x)n}, in floating point.
std::complex<double> poisson_expect_series(const PointMeasure& omega, const GradedFn& p, int K);

// Points x that occur in some multiset where a component of p is nonzero.
std::set<Label> support(const GradedFn& p);

// F(eta, x) = family[x] evaluated as a polynomial at the configuration eta.
using MeckeKernel = std::vector<GradedFn>;

Report check_poisson_routes(const PointMeasure& omega, const GradedFn& p);
Report check_umbral(const PointMeasure& omega, const SymFn& g);
Report check_mecke_order(const PointMeasure& omega, const MeckeKernel& F, int N);
Report check_independence(const PointMeasure& omega, const std::set<Label>& A, const std::set<Label>& B,
                          const GradedFn& pA, const GradedFn& pB);
Report laplace_coeffs(const PointMeasure& omega, const PointFn& xi, int N);

}  // namespace spatial
