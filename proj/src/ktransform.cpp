#include "spatial/ktransform.hpp"

#include <functional>
#include <stdexcept>

#include "spatial/stirling.hpp"

namespace spatial {

GradedFn ktransform(const GradedFn& f) {
  GradedFn p(f.m, f.degree());
  for (int n = 0; n <= f.degree(); ++n) {
    if (f[n].is_zero()) continue;
    Scalar inv = Scalar(1) / factorial(static_cast<unsigned>(n));
    for (int k = 0; k <= n; ++k) p[k] += apply_operator(OperatorKind::S1, n, k, f[n]) * inv;
  }
  return p;
}

GradedFn kinverse(const GradedFn& p) {
  GradedFn f(p.m, p.degree());
  for (int n = 0; n <= p.degree(); ++n) {
    const auto& b = f[n].basis();
    for (std::size_t i = 0; i < f[n].size(); ++i) {
      Scalar acc(0);
      for_each_submultiset_any(b.counts(i), [&](const Counts& sigma, const Scalar& w) {
        int size = 0;
        for (int v : sigma) size += v;
        Scalar val = eval_polynomial(p, configuration(sigma)) * w;
        if ((n - size) % 2 == 0) acc += val;
        else acc -= val;
      });
      f[n][i] = acc;
    }
  }
  return f;
}

GradedFn star(const GradedFn& f, const GradedFn& g) {
  if (f.m != g.m) throw std::invalid_argument("ground set mismatch");
  const int m = f.m;
  GradedFn out(m, f.degree() + g.degree());
  for (int n = 0; n <= out.degree(); ++n) {
    const auto& b = out[n].basis();
    for (std::size_t i = 0; i < out[n].size(); ++i) {
      const Counts& eta = b.counts(i);
      Counts c1(static_cast<std::size_t>(m), 0), c2(c1), c3(c1);
      Scalar acc(0);
      // split each point's multiplicity into (a, b, c) with multinomial weight
      std::function<void(int, const Scalar&)> rec = [&](int x, const Scalar& w) {
        if (x == m) {
          Counts left(c1), right(c3);
          for (int y = 0; y < m; ++y) {
            left[static_cast<std::size_t>(y)] += c2[static_cast<std::size_t>(y)];
            right[static_cast<std::size_t>(y)] += c2[static_cast<std::size_t>(y)];
          }
          Scalar fv = eval_on_counts(f, left);
          if (fv.is_zero()) return;
          Scalar gv = eval_on_counts(g, right);
          if (!gv.is_zero()) acc += w * fv * gv;
          return;
        }
        const int e = eta[static_cast<std::size_t>(x)];
        for (int a = 0; a <= e; ++a)
          for (int bb = 0; a + bb <= e; ++bb) {
            int cc = e - a - bb;
            c1[static_cast<std::size_t>(x)] = a;
            c2[static_cast<std::size_t>(x)] = bb;
            c3[static_cast<std::size_t>(x)] = cc;
            Scalar mult = factorial(static_cast<unsigned>(e)) /
                          (factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(bb)) *
                           factorial(static_cast<unsigned>(cc)));
            rec(x + 1, w * mult);
          }
      };
      rec(0, Scalar(1));
      out[n][i] = acc;
    }
  }
  return out;
}

Scalar subconfiguration_sum(const GradedFn& f, const Counts& gamma) {
  Scalar acc(0);
  for_each_submultiset_any(gamma, [&](const Counts& eta, const Scalar& w) { acc += w * eval_on_counts(f, eta); });
  return acc;
}

Report check_star_homomorphism(const GradedFn& f, const GradedFn& g, const PointMeasure& omega) {
  Report r("star_homomorphism");
  Scalar lhs = eval_polynomial(ktransform(star(f, g)), omega);
  Scalar rhs = eval_polynomial(ktransform(f), omega) * eval_polynomial(ktransform(g), omega);
  r.expect_equal(lhs, rhs, "K(f*g) = Kf Kg");
  return r;
}

Report check_k_roundtrip(const GradedFn& f, const GradedFn& p) {
  Report r("k_roundtrip");
  r.expect_equal(kinverse(ktransform(f)), f, "K^{-1} K f = f");
  r.expect_equal(ktransform(kinverse(p)), p, "K K^{-1} p = p");
  return r;
}

}  // namespace spatial
