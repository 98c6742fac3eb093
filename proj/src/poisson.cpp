#include "spatial/poisson.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "spatial/factorial.hpp"
#include "spatial/polyop.hpp"
#include "spatial/series.hpp"
#include "spatial/stirling.hpp"

namespace spatial {

Scalar poisson_expect(const PointMeasure& omega, const GradedFn& p) {
  if (p.m != omega.m()) throw std::invalid_argument("ground set mismatch");
  Scalar s = p[0][0];
  for (int n = 1; n <= p.degree(); ++n) {
    if (p[n].is_zero()) continue;
    for (int k = 1; k <= n; ++k) s += pair(power_measure(omega, k), apply_operator(OperatorKind::S2, n, k, p[n]));
  }
  return s;
}

// prod_x omega_x^{a_x} / a_x!
static Scalar poisson_weight(const PointMeasure& omega, const Counts& a) {
  Scalar w(1);
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] > 0) w *= omega[static_cast<Label>(x)].pow(static_cast<unsigned>(a[x])) / factorial(static_cast<unsigned>(a[x]));
  return w;
}

Scalar poisson_expect_finite(const PointMeasure& omega, const GradedFn& p) {
  std::set<Label> all;
  for (Label x = 0; x < omega.m(); ++x) all.insert(x);
  return poisson_expect_finite(omega, p, all);
}

Scalar poisson_expect_finite(const PointMeasure& omega, const GradedFn& p, const std::set<Label>& lambda) {
  if (p.m != omega.m()) throw std::invalid_argument("ground set mismatch");
  for (Label x : support(p))
    if (!lambda.count(x)) throw std::invalid_argument("Lambda must contain the support of p");
  const int n = p.effective_degree();
  const Scalar mass = measure_eval(omega, lambda);
  Scalar total(0);
  for (int i = 0; i <= n; ++i) {
    Scalar tail(0);
    for (int k = 0; k <= n - i; ++k) tail += (-mass).pow(static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k));
    Scalar integral(0);
    const auto& b = MultisetBasis::get(omega.m(), i);
    for (std::size_t t = 0; t < b.size(); ++t) {
      const Counts& a = b.counts(t);
      bool inside = true;
      for (std::size_t x = 0; x < a.size(); ++x)
        if (a[x] > 0 && !lambda.count(static_cast<Label>(x))) inside = false;
      if (!inside) continue;
      integral += poisson_weight(omega, a) * eval_polynomial(p, configuration(a));
    }
    total += integral * tail;
  }
  return total;
}

std::complex<double> poisson_expect_series(const PointMeasure& omega, const GradedFn& p, int K) {
  if (K < 1) throw std::invalid_argument("series truncation must be >= 1");
  using C = std::complex<double>;
  const int m = omega.m();
  std::vector<std::vector<C>> comps;  // float copies of the components
  for (int k = 0; k <= p.degree(); ++k) {
    std::vector<C> v;
    for (std::size_t i = 0; i < p[k].size(); ++i) v.push_back((p[k].basis().perm_count(i) * p[k][i]).to_complex());
    comps.push_back(std::move(v));
  }
  std::vector<std::vector<C>> table(static_cast<std::size_t>(m));  // omega_x^a / a!
  for (int x = 0; x < m; ++x) {
    C w = omega[x].to_complex();
    table[static_cast<std::size_t>(x)].push_back(1.0);
    for (int a = 1; a <= K; ++a) table[static_cast<std::size_t>(x)].push_back(table[static_cast<std::size_t>(x)].back() * w / static_cast<double>(a));
  }
  auto eval_at = [&](const Counts& a) {
    C s = 0.0;
    for (int k = 0; k <= p.degree(); ++k) {
      const auto& b = p[k].basis();
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (comps[static_cast<std::size_t>(k)][i] == C(0.0)) continue;
        C mono = 1.0;
        for (Label x : b.at(i)) mono *= static_cast<double>(a[static_cast<std::size_t>(x)]);
        s += comps[static_cast<std::size_t>(k)][i] * mono;
      }
    }
    return s;
  };
  C total = 0.0;
  Counts a(static_cast<std::size_t>(m), 0);
  std::function<void(int, int, C)> rec = [&](int x, int left, C w) {
    if (x == m) {
      total += w * eval_at(a);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      a[static_cast<std::size_t>(x)] = c;
      rec(x + 1, left - c, w * table[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)]);
    }
    a[static_cast<std::size_t>(x)] = 0;
  };
  rec(0, K, 1.0);
  return std::exp(-total_mass(omega).to_complex()) * total;
}

std::set<Label> support(const GradedFn& p) {
  std::set<Label> s;
  for (int k = 1; k <= p.degree(); ++k) {
    const auto& b = p[k].basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!p[k][i].is_zero())
        for (Label x : b.at(i)) s.insert(x);
  }
  return s;
}

Report check_poisson_routes(const PointMeasure& omega, const GradedFn& p) {
  Report r("poisson_routes");
  Scalar exact = poisson_expect(omega, p);
  r.expect_equal(exact, poisson_expect_finite(omega, p), "Stirling route = finite route");
  r.expect_equal(exact, poisson_expect_finite(omega, p, support(p)), "finite route with Lambda = support");
  return r;
}

Report check_umbral(const PointMeasure& omega, const SymFn& g) {
  Report r("umbral");
  const int k = g.rank();
  GradedFn coeffs(g.m(), k);
  coeffs[k] = g;
  GradedFn p = falling_synthesis(coeffs);
  r.expect_equal(poisson_expect(omega, p), pair(power_measure(omega, k), g),
                 "E <(.)_k, g> = <omega^k, g> k=" + std::to_string(k));
  return r;
}

Report check_mecke_order(const PointMeasure& omega, const MeckeKernel& F, int N) {
  const int m = omega.m();
  if (static_cast<int>(F.size()) != m) throw std::invalid_argument("Mecke kernel needs one polynomial per point");
  Report r("mecke");
  for (int n = 1; n <= N; ++n) {
    Scalar lhs(0), rhs(0);
    const auto& bn = MultisetBasis::get(m, n);
    for (std::size_t t = 0; t < bn.size(); ++t) {
      const Counts& a = bn.counts(t);
      Scalar inner(0);
      for (Label x = 0; x < m; ++x)
        if (a[static_cast<std::size_t>(x)] > 0)
          inner += Scalar(a[static_cast<std::size_t>(x)]) * eval_polynomial(F[static_cast<std::size_t>(x)], configuration(a));
      lhs += poisson_weight(omega, a) * inner;
    }
    const auto& bp = MultisetBasis::get(m, n - 1);
    for (std::size_t t = 0; t < bp.size(); ++t) {
      const Counts& b = bp.counts(t);
      Scalar inner(0);
      for (Label x = 0; x < m; ++x) {
        Counts bx(b);
        ++bx[static_cast<std::size_t>(x)];
        inner += omega[x] * eval_polynomial(F[static_cast<std::size_t>(x)], configuration(bx));
      }
      rhs += poisson_weight(omega, b) * inner;
    }
    r.expect_equal(lhs, rhs, "Mecke order " + std::to_string(n));
  }
  return r;
}

Report check_independence(const PointMeasure& omega, const std::set<Label>& A, const std::set<Label>& B,
                          const GradedFn& pA, const GradedFn& pB) {
  for (Label x : A)
    if (B.count(x)) throw std::invalid_argument("supports overlap");
  for (Label x : support(pA))
    if (!A.count(x)) throw std::invalid_argument("p_A is not supported on A");
  for (Label x : support(pB))
    if (!B.count(x)) throw std::invalid_argument("p_B is not supported on B");
  Report r("independence");
  r.expect_equal(poisson_expect(omega, multiply_polynomials(pA, pB)),
                 poisson_expect(omega, pA) * poisson_expect(omega, pB), "E(pA pB) = E(pA) E(pB)");
  return r;
}

Report laplace_coeffs(const PointMeasure& omega, const PointFn& xi, int N) {
  if (N < 1) throw std::invalid_argument("order must be >= 1");
  Report r("laplace");
  ScalarSeries lhs(N), exponent(N);
  for (int n = 0; n <= N; ++n)
    lhs[n] = poisson_expect(omega, GradedFn::monomial(power_fn(xi, n))) / factorial(static_cast<unsigned>(n));
  for (int i = 1; i <= N; ++i)
    exponent[i] = integrate(omega, pointwise_pow(xi, static_cast<unsigned>(i))) / factorial(static_cast<unsigned>(i));
  r.expect_equal(lhs, series_exp(exponent), "Laplace transform coefficients");
  return r;
}

}  // namespace spatial
