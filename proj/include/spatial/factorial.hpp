#pragma once

#include "spatial/ground.hpp"
#include "spatial/report.hpp"
#include "spatial/symtensor.hpp"

namespace spatial {

// prod_k (omega_{x_k} - #{j<k : x_j = x_k}) for an arbitrary ordered tuple.
Scalar falling_ordered_mass(const PointMeasure& omega, const std::vector<Label>& tuple);
// same with + signs
Scalar rising_ordered_mass(const PointMeasure& omega, const std::vector<Label>& tuple);

SymMeasure falling(const PointMeasure& omega, int n);
SymMeasure rising(const PointMeasure& omega, int n);
// (omega)_n / n!
SymMeasure binom_measure(const PointMeasure& omega, int n);

Report check_binomial(const PointMeasure& omega, const PointMeasure& sigma, int n);
Report check_lowering(const PointMeasure& omega, Label x, int n);
Report check_recurrence(const PointMeasure& omega, const PointFn& xi, int n);
Report check_genfun_factorial(const PointMeasure& omega, const PointFn& xi, int N);

}  // namespace spatial
