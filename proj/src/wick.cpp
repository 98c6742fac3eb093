#include "spatial/wick.hpp"

#include <functional>
#include <stdexcept>

#include "spatial/poisson.hpp"
#include "spatial/stirling.hpp"

namespace spatial {

RefMeasure::RefMeasure(PointMeasure sigma) : sigma_(std::move(sigma)) {
  for (Label x = 0; x < sigma_.m(); ++x) {
    if (sigma_[x].is_zero()) throw std::invalid_argument("reference measure weights must be nonzero");
    kappa_.push_back(Scalar(1) / sigma_[x]);
  }
}

WickPoly WickPoly::one(const RefMeasure& ref) {
  return monomial(ref, {}, {});
}

WickPoly WickPoly::monomial(const RefMeasure& ref, const MultiIndex& A, const MultiIndex& B, const Scalar& c) {
  WickPoly p(ref);
  p.add({to_counts(A, ref.m()), to_counts(B, ref.m())}, c);
  return p;
}

void WickPoly::add(const WickMonomial& mono, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void WickPoly::check(const WickPoly& o) const {
  if (!(ref_ == o.ref_)) throw std::invalid_argument("reference measure mismatch");
}

WickPoly& WickPoly::operator+=(const WickPoly& o) {
  check(o);
  for (const auto& [mono, c] : o.terms_) add(mono, c);
  return *this;
}

WickPoly& WickPoly::operator-=(const WickPoly& o) {
  check(o);
  for (const auto& [mono, c] : o.terms_) add(mono, -c);
  return *this;
}

WickPoly& WickPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

namespace {

// Number of ways to contract j of the b annihilators with j of the a creators.
Scalar contract_count(int b, int a, int j) {
  return binomial(b, j) * binomial(a, j) * factorial(static_cast<unsigned>(j));
}

void multiply_monomials(const RefMeasure& ref, const WickMonomial& left, const WickMonomial& right,
                        const Scalar& coef, WickPoly& out) {
  const int m = ref.m();
  Counts j(static_cast<std::size_t>(m), 0);
  std::function<void(int, const Scalar&)> rec = [&](int x, const Scalar& w) {
    if (x == m) {
      WickMonomial mono{left.A, right.B};
      for (std::size_t y = 0; y < j.size(); ++y) {
        mono.A[y] += right.A[y] - j[y];
        mono.B[y] += left.B[y] - j[y];
      }
      out.add(mono, w);
      return;
    }
    const auto sx = static_cast<std::size_t>(x);
    const int top = std::min(left.B[sx], right.A[sx]);
    for (int t = 0; t <= top; ++t) {
      j[sx] = t;
      rec(x + 1, w * contract_count(left.B[sx], right.A[sx], t) * ref.kappa(x).pow(static_cast<unsigned>(t)));
    }
    j[sx] = 0;
  };
  rec(0, coef);
}

}  // namespace

WickPoly normal_order_product(const WickPoly& P, const WickPoly& Q) {
  if (!(P.ref() == Q.ref())) throw std::invalid_argument("reference measure mismatch");
  WickPoly out(P.ref());
  for (const auto& [lm, lc] : P.terms())
    for (const auto& [rm, rc] : Q.terms()) multiply_monomials(P.ref(), lm, rm, lc * rc, out);
  return out;
}

WickPoly commutator(const WickPoly& P, const WickPoly& Q) {
  return normal_order_product(P, Q) - normal_order_product(Q, P);
}

WickPoly product_chain(const std::vector<WickPoly>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  WickPoly out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = normal_order_product(out, factors[i]);
  return out;
}

WickPoly creator(const RefMeasure& ref, Label x) { return WickPoly::monomial(ref, {x}, {}); }
WickPoly annihilator(const RefMeasure& ref, Label x) { return WickPoly::monomial(ref, {}, {x}); }

WickPoly a_plus(const RefMeasure& ref, const PointFn& xi) {
  WickPoly p(ref);
  for (Label x = 0; x < ref.m(); ++x) p += creator(ref, x) * (xi[x] * ref.sigma()[x]);
  return p;
}

WickPoly a_minus(const RefMeasure& ref, const PointFn& xi) {
  WickPoly p(ref);
  for (Label x = 0; x < ref.m(); ++x) p += annihilator(ref, x) * (xi[x] * ref.sigma()[x]);
  return p;
}

WickPoly rho(const RefMeasure& ref, const PointFn& xi) {
  WickPoly p(ref);
  for (Label x = 0; x < ref.m(); ++x) p += WickPoly::monomial(ref, {x}, {x}, xi[x] * ref.sigma()[x]);
  return p;
}

WickPoly r_operator(const RefMeasure& ref, const PointFn& xi) {
  return a_plus(ref, xi) + a_minus(ref, xi) + rho(ref, xi) +
         WickPoly::one(ref) * integrate(ref.sigma(), xi);
}

WickPoly wick_rho_product(const RefMeasure& ref, const std::vector<PointFn>& xis) {
  if (xis.empty()) throw std::invalid_argument("Wick product needs k >= 1");
  if (xis.size() == 1) return rho(ref, xis.front());
  std::vector<PointFn> rest(xis.begin() + 1, xis.end());
  WickPoly out = normal_order_product(rho(ref, xis.front()), wick_rho_product(ref, rest));
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<PointFn> merged(rest);
    merged[i] = pointwise(xis.front(), rest[i]);
    out -= wick_rho_product(ref, merged);
  }
  return out;
}

WickPoly wick_kernel(const RefMeasure& ref, const SymFn& K) {
  if (K.m() != ref.m()) throw std::invalid_argument("ground set mismatch");
  WickPoly out(ref);
  const auto& b = K.basis();
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (K[i].is_zero()) continue;
    Scalar w = b.perm_count(i) * K[i];
    for (Label x : b.at(i)) w *= ref.sigma()[x];
    out.add({b.counts(i), b.counts(i)}, w);
  }
  return out;
}

WickPoly katriel_rhs(const RefMeasure& ref, const std::vector<PointFn>& xis) {
  if (xis.empty()) throw std::invalid_argument("Katriel needs n >= 1");
  const int n = static_cast<int>(xis.size());
  SymFn prod = sym_product_all(xis);
  WickPoly out(ref);
  for (int k = 1; k <= n; ++k) out += wick_kernel(ref, apply_operator(OperatorKind::S2, n, k, prod));
  return out;
}

Scalar vacuum(const WickPoly& P) {
  const auto m = static_cast<std::size_t>(P.ref().m());
  auto it = P.terms().find({Counts(m, 0), Counts(m, 0)});
  return it == P.terms().end() ? Scalar(0) : it->second;
}

Report check_ccr(const RefMeasure& ref, const PointFn& phi, const PointFn& xi) {
  Report r("ccr");
  auto eq = [&](const WickPoly& a, const WickPoly& b, const char* what) { r.expect(a == b, what); };
  const PointFn prod = pointwise(phi, xi);
  eq(commutator(a_minus(ref, phi), a_plus(ref, xi)), WickPoly::one(ref) * integrate(ref.sigma(), prod),
     "[a-(phi), a+(xi)] = <sigma, phi xi>");
  eq(commutator(a_plus(ref, phi), a_plus(ref, xi)), WickPoly(ref), "[a+, a+] = 0");
  eq(commutator(a_minus(ref, phi), a_minus(ref, xi)), WickPoly(ref), "[a-, a-] = 0");
  eq(commutator(rho(ref, phi), a_plus(ref, xi)), a_plus(ref, prod), "[rho(phi), a+(xi)] = a+(phi xi)");
  eq(commutator(a_minus(ref, xi), rho(ref, phi)), a_minus(ref, prod), "[a-(xi), rho(phi)] = a-(phi xi)");
  eq(commutator(rho(ref, phi), rho(ref, xi)), WickPoly(ref), "[rho, rho] = 0");
  eq(commutator(r_operator(ref, phi), r_operator(ref, xi)), WickPoly(ref), "[R, R] = 0");
  return r;
}

Report check_wick_routes(const RefMeasure& ref, const std::vector<PointFn>& xis) {
  Report r("wick_routes");
  r.expect(wick_rho_product(ref, xis) == wick_kernel(ref, sym_product_all(xis)),
           "recursive Wick product = direct route k=" + std::to_string(xis.size()));
  return r;
}

Report check_katriel(const RefMeasure& ref, const std::vector<PointFn>& xis) {
  Report r("katriel");
  std::vector<WickPoly> factors;
  for (const auto& xi : xis) factors.push_back(rho(ref, xi));
  r.expect(product_chain(factors) == katriel_rhs(ref, xis), "Katriel n=" + std::to_string(xis.size()));
  return r;
}

Report check_quantum_poisson(const RefMeasure& ref, const std::vector<PointFn>& xis) {
  Report r("quantum_poisson");
  std::vector<WickPoly> factors;
  GradedFn poly = GradedFn::constant(ref.m(), Scalar(1));
  for (const auto& xi : xis) {
    factors.push_back(r_operator(ref, xi));
    poly = multiply_polynomials(poly, GradedFn::monomial(as_symfn(xi)));
  }
  r.expect_equal(vacuum(product_chain(factors)), poisson_expect(ref.sigma(), poly),
                 "tau(R...R) = E(<.,xi_1>...<.,xi_n>) n=" + std::to_string(xis.size()));
  return r;
}

Report check_lemma_R_normal(const RefMeasure& ref, const std::vector<PointFn>& xis) {
  Report r("lemma_R_normal");
  const int n = static_cast<int>(xis.size());
  std::vector<WickPoly> factors;
  for (const auto& xi : xis) factors.push_back(r_operator(ref, xi));
  SymFn prod = sym_product_all(xis);
  WickPoly rhs(ref);
  for (int k = 1; k <= n; ++k) {
    SymFn K = apply_operator(OperatorKind::S2, n, k, prod);
    const auto& b = K.basis();
    for (std::size_t i = 0; i < K.size(); ++i) {
      if (K[i].is_zero()) continue;
      Scalar w = b.perm_count(i) * K[i];
      for (Label x : b.at(i)) w *= ref.sigma()[x];
      // (a^+(x_1)+1)...(a^+(x_k)+1)(a^-(x_k)+1)...(a^-(x_1)+1) over position subsets
      for_each_submultiset_any(b.counts(i), [&](const Counts& A, const Scalar& wa) {
        for_each_submultiset_any(b.counts(i), [&](const Counts& B, const Scalar& wb) {
          rhs.add({A, B}, w * wa * wb);
        });
      });
    }
  }
  r.expect(product_chain(factors) == rhs, "R...R shifted normal form n=" + std::to_string(n));
  return r;
}

}  // namespace spatial
