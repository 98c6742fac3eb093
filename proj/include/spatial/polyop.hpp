#pragma once

#include <vector>

#include "spatial/ground.hpp"
#include "spatial/report.hpp"
#include "spatial/symtensor.hpp"

namespace spatial {

// (D_x f)(.) = n f(x, .) for f of rank n >= 1.
SymFn point_derivative(const SymFn& f, Label x);

// d/d delta_x: f^(n) contributes n f^(n)(x, .) at degree n-1.
GradedFn partial_derivative(const GradedFn& p, Label x);
// p(omega + delta_x) - p(omega) by binomial re-expansion.
GradedFn difference(const GradedFn& p, Label x);

// Coefficients g^(k) with p(omega) = sum_k <(omega)_k, g^(k)>, from
// g^(k)(x) = ((-1)^k/k!) sum over position subsets eta of x of (-1)^{|eta|} p(eta).
GradedFn euler_expand(const GradedFn& p);
// Monomial form of omega -> sum_k <(omega)_k, g^(k)>.
GradedFn falling_synthesis(const GradedFn& g);

// <omega, xi d>: f^(n) -> N(xi) f^(n).
GradedFn euler_op(const PointFn& xi, const GradedFn& p);
// <omega^{(x)k}, g d^{(x)k}>: <.^{(x)m}, h> -> (m)_k <.^{(x)m}, h * (g (.) 1^{(m-k)})>.
GradedFn wick_diff_op(const SymFn& g, const GradedFn& p);

Report check_derivative_difference(const GradedFn& p, Label x);
Report check_euler_roundtrip(const GradedFn& p, const GradedFn& g, const PointMeasure& omega);
Report check_grunert(const std::vector<PointFn>& xis, const GradedFn& probe);
Report check_wick_diff_lemma(const PointFn& xi, const SymFn& f, const GradedFn& probe);

}  // namespace spatial
