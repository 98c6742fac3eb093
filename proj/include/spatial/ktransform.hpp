#pragma once

#include "spatial/ground.hpp"
#include "spatial/report.hpp"
#include "spatial/symtensor.hpp"

namespace spatial {

// (K f)(omega) = sum_n <binom(omega, n), f^(n)>, returned in monomial form.
GradedFn ktransform(const GradedFn& f);
// (K^{-1} p)(eta) = sum over position subsets sigma of eta of (-1)^{|eta|-|sigma|} p(sigma).
GradedFn kinverse(const GradedFn& p);
// (f * g)(eta) = sum over assignments of the positions of eta to blocks 1, 2, 3
// of f(block1 + block2) g(block2 + block3).
GradedFn star(const GradedFn& f, const GradedFn& g);

// sum of f over the position subsets of the configuration gamma
Scalar subconfiguration_sum(const GradedFn& f, const Counts& gamma);

Report check_star_homomorphism(const GradedFn& f, const GradedFn& g, const PointMeasure& omega);
Report check_k_roundtrip(const GradedFn& f, const GradedFn& p);

}  // namespace spatial
