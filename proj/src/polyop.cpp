#include "spatial/polyop.hpp"

#include <map>
#include <stdexcept>

#include "spatial/factorial.hpp"
#include "spatial/stirling.hpp"

namespace spatial {

static Counts point_counts(int m, Label x, int times) {
  if (x < 0 || x >= m) throw std::out_of_range("label out of range");
  Counts c(static_cast<std::size_t>(m), 0);
  c[static_cast<std::size_t>(x)] = times;
  return c;
}

SymFn point_derivative(const SymFn& f, Label x) {
  if (f.rank() < 1) throw std::invalid_argument("derivative needs rank >= 1");
  return slice(f, point_counts(f.m(), x, 1)) * Scalar(f.rank());
}

GradedFn partial_derivative(const GradedFn& p, Label x) {
  GradedFn out(p.m, std::max(p.degree() - 1, 0));
  for (int n = 1; n <= p.degree(); ++n) out[n - 1] += point_derivative(p[n], x);
  return out;
}

GradedFn difference(const GradedFn& p, Label x) {
  GradedFn out(p.m, std::max(p.degree() - 1, 0));
  for (int n = 1; n <= p.degree(); ++n)
    for (int j = 1; j <= n; ++j) out[n - j] += slice(p[n], point_counts(p.m, x, j)) * binomial(n, j);
  return out;
}

GradedFn euler_expand(const GradedFn& p) {
  const int m = p.m;
  GradedFn g(m, p.degree());
  std::map<Counts, Scalar> values;
  auto value = [&](const Counts& eta) -> const Scalar& {
    auto it = values.find(eta);
    if (it != values.end()) return it->second;
    return values.emplace(eta, eval_polynomial(p, configuration(eta))).first->second;
  };
  for (int k = 0; k <= p.degree(); ++k) {
    const Scalar pre = Scalar(k % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(k));
    const auto& b = g[k].basis();
    for (std::size_t i = 0; i < g[k].size(); ++i) {
      Scalar acc(0);
      for_each_submultiset_any(b.counts(i), [&](const Counts& eta, const Scalar& w) {
        int size = 0;
        for (int v : eta) size += v;
        acc += (size % 2 == 0 ? w : -w) * value(eta);
      });
      g[k][i] = pre * acc;
    }
  }
  return g;
}

GradedFn falling_synthesis(const GradedFn& g) {
  GradedFn p(g.m, g.degree());
  for (int k = 0; k <= g.degree(); ++k) {
    if (g[k].is_zero()) continue;
    for (int j = 0; j <= k; ++j) p[j] += apply_operator(OperatorKind::S1, k, j, g[k]);
  }
  return p;
}

GradedFn euler_op(const PointFn& xi, const GradedFn& p) {
  GradedFn out(p.m, p.degree());
  for (int n = 1; n <= p.degree(); ++n) out[n] = multiply_N(xi, p[n]);
  return out;
}

GradedFn wick_diff_op(const SymFn& g, const GradedFn& p) {
  const int k = g.rank();
  if (k < 1) throw std::invalid_argument("wick_diff_op needs rank >= 1");
  GradedFn out(p.m, p.degree());
  for (int n = k; n <= p.degree(); ++n) {
    if (p[n].is_zero()) continue;
    SymFn lifted = sym_product_fn(g, SymFn::constant(p.m, n - k, Scalar(1)));
    out[n] = hadamard(p[n], lifted) * falling_number(Scalar(n), static_cast<unsigned>(k));
  }
  return out;
}

Report check_derivative_difference(const GradedFn& p, Label x) {
  Report r("derivative_difference");
  GradedFn series(p.m, std::max(p.degree() - 1, 0));
  GradedFn term = p;
  for (int k = 1; k <= p.degree(); ++k) {
    term = partial_derivative(term, x);
    series += term * (Scalar(1) / factorial(static_cast<unsigned>(k)));
  }
  r.expect_equal(difference(p, x), series, "D_x = exp(d_x) - 1");
  return r;
}

Report check_euler_roundtrip(const GradedFn& p, const GradedFn& g, const PointMeasure& omega) {
  Report r("euler_roundtrip");
  GradedFn coeffs = euler_expand(p);
  r.expect_equal(falling_synthesis(coeffs), p, "synthesis(expand(p)) = p");
  r.expect_equal(euler_expand(falling_synthesis(g)), g, "expand(synthesis(g)) = g");
  Scalar via_falling(0);
  for (int k = 0; k <= coeffs.degree(); ++k) via_falling += pair(falling(omega, k), coeffs[k]);
  r.expect_equal(via_falling, eval_polynomial(p, omega), "sum <(omega)_k, g^(k)> = p(omega)");
  return r;
}

Report check_grunert(const std::vector<PointFn>& xis, const GradedFn& probe) {
  if (xis.empty()) throw std::invalid_argument("Grunert check needs n >= 1");
  Report r("grunert");
  const int n = static_cast<int>(xis.size());
  GradedFn lhs = probe;
  for (int t = n - 1; t >= 0; --t) lhs = euler_op(xis[static_cast<std::size_t>(t)], lhs);
  SymFn prod = sym_product_all(xis);
  GradedFn rhs(probe.m, probe.degree());
  for (int k = 1; k <= n; ++k) rhs += wick_diff_op(apply_operator(OperatorKind::S2, n, k, prod), probe);
  r.expect_equal(lhs, rhs, "Grunert n=" + std::to_string(n));
  return r;
}

Report check_wick_diff_lemma(const PointFn& xi, const SymFn& f, const GradedFn& probe) {
  Report r("wick_diff_lemma");
  GradedFn lhs = euler_op(xi, wick_diff_op(f, probe));
  GradedFn rhs = wick_diff_op(multiply_N(xi, f), probe) + wick_diff_op(sym_product_fn(as_symfn(xi), f), probe);
  r.expect_equal(lhs, rhs, "<omega, xi d> after W(f)");
  return r;
}

}  // namespace spatial
