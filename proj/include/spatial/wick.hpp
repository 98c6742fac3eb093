#pragma once

#include <map>
#include <vector>

#include "spatial/ground.hpp"
#include "spatial/multiset.hpp"
#include "spatial/report.hpp"
#include "spatial/symtensor.hpp"

namespace spatial {

// Reference measure sigma with nonzero weights; [a^-(x), a^+(y)] = delta_xy kappa_x
// with kappa_x = 1/sigma_x, so that the smeared operators satisfy the CCR.
class RefMeasure {
 public:
  explicit RefMeasure(PointMeasure sigma);
  const PointMeasure& sigma() const { return sigma_; }
  int m() const { return sigma_.m(); }
  const Scalar& kappa(Label x) const { return kappa_[static_cast<std::size_t>(x)]; }
  friend bool operator==(const RefMeasure& a, const RefMeasure& b) { return a.sigma_ == b.sigma_; }

 private:
  PointMeasure sigma_;
  std::vector<Scalar> kappa_;
};

// a^+(A) a^-(B), stored as multiplicity vectors.
struct WickMonomial {
  Counts A, B;
  friend bool operator<(const WickMonomial& a, const WickMonomial& b) {
    return a.A != b.A ? a.A < b.A : a.B < b.B;
  }
  friend bool operator==(const WickMonomial& a, const WickMonomial& b) { return a.A == b.A && a.B == b.B; }
};

class WickPoly {
 public:
  explicit WickPoly(const RefMeasure& ref) : ref_(ref) {}
  static WickPoly one(const RefMeasure& ref);
  static WickPoly monomial(const RefMeasure& ref, const MultiIndex& A, const MultiIndex& B,
                           const Scalar& c = Scalar(1));

  const RefMeasure& ref() const { return ref_; }
  const std::map<WickMonomial, Scalar>& terms() const { return terms_; }
  void add(const WickMonomial& mono, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }

  WickPoly& operator+=(const WickPoly& o);
  WickPoly& operator-=(const WickPoly& o);
  WickPoly& operator*=(const Scalar& s);
  friend WickPoly operator+(WickPoly a, const WickPoly& b) { return a += b; }
  friend WickPoly operator-(WickPoly a, const WickPoly& b) { return a -= b; }
  friend WickPoly operator*(WickPoly a, const Scalar& s) { return a *= s; }
  friend bool operator==(const WickPoly& a, const WickPoly& b) {
    return a.ref_ == b.ref_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WickPoly& a, const WickPoly& b) { return !(a == b); }

 private:
  void check(const WickPoly& o) const;

  RefMeasure ref_;
  std::map<WickMonomial, Scalar> terms_;
};

WickPoly normal_order_product(const WickPoly& P, const WickPoly& Q);
WickPoly commutator(const WickPoly& P, const WickPoly& Q);
WickPoly product_chain(const std::vector<WickPoly>& factors);

WickPoly creator(const RefMeasure& ref, Label x);
WickPoly annihilator(const RefMeasure& ref, Label x);
// a^{+-}(xi) = sum_x xi_x sigma_x a^{+-}(x)
WickPoly a_plus(const RefMeasure& ref, const PointFn& xi);
WickPoly a_minus(const RefMeasure& ref, const PointFn& xi);
// rho(xi) = sum_x xi_x sigma_x a^+(x) a^-(x)
WickPoly rho(const RefMeasure& ref, const PointFn& xi);
// R(xi) = a^+(xi) + a^-(xi) + rho(xi) + <sigma, xi>
WickPoly r_operator(const RefMeasure& ref, const PointFn& xi);

// Smeared Wick product built by the recursion
// W(xi_1..xi_n) = rho(xi_1) W(xi_2..xi_n) - sum_{i>=2} W(xi_2, .., xi_1 xi_i, .., xi_n).
WickPoly wick_rho_product(const RefMeasure& ref, const std::vector<PointFn>& xis);
// Direct route: sum over ordered k-tuples of K(x) prod sigma_{x_i} (A = B = tuple).
WickPoly wick_kernel(const RefMeasure& ref, const SymFn& K);
// sum_k wick_kernel(S(n,k)(xi_1 (.) ... (.) xi_n))
WickPoly katriel_rhs(const RefMeasure& ref, const std::vector<PointFn>& xis);
// coefficient of the empty monomial
Scalar vacuum(const WickPoly& P);

Report check_ccr(const RefMeasure& ref, const PointFn& phi, const PointFn& xi);
Report check_wick_routes(const RefMeasure& ref, const std::vector<PointFn>& xis);
Report check_katriel(const RefMeasure& ref, const std::vector<PointFn>& xis);
Report check_quantum_poisson(const RefMeasure& ref, const std::vector<PointFn>& xis);
Report check_lemma_R_normal(const RefMeasure& ref, const std::vector<PointFn>& xis);

}  // namespace spatial
