#pragma once

#include <functional>
#include <vector>

#include "spatial/ground.hpp"
#include "spatial/multiset.hpp"
#include "spatial/scalar.hpp"

namespace spatial {

// Dense symmetric tensor on X^n stored at canonical multisets.
// For functions the entry is the value at any ordering; for measures it is the
// mass at one ordered representative, so pair() carries perm_count explicitly.
template <class Tag>
class SymTensor {
 public:
  SymTensor(int m, int rank);
  static SymTensor constant(int m, int rank, const Scalar& c);

  int m() const { return basis_->m(); }
  int rank() const { return basis_->n(); }
  const MultisetBasis& basis() const { return *basis_; }
  std::size_t size() const { return v_.size(); }

  const Scalar& operator[](std::size_t i) const { return v_[i]; }
  Scalar& operator[](std::size_t i) { return v_[i]; }
  const Scalar& at(const MultiIndex& idx) const { return v_[basis_->rank(idx)]; }
  Scalar& at(const MultiIndex& idx) { return v_[basis_->rank(idx)]; }
  const Scalar& at_counts(const Counts& c) const { return v_[basis_->rank_counts(c)]; }
  Scalar& at_counts(const Counts& c) { return v_[basis_->rank_counts(c)]; }
  const std::vector<Scalar>& values() const { return v_; }

  bool is_zero() const;
  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  SymTensor& operator*=(const Scalar& s);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(SymTensor a, const Scalar& s) { return a *= s; }
  friend SymTensor operator*(const Scalar& s, SymTensor a) { return a *= s; }
  SymTensor operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const SymTensor& a, const SymTensor& b) {
    return a.m() == b.m() && a.rank() == b.rank() && a.v_ == b.v_;
  }
  friend bool operator!=(const SymTensor& a, const SymTensor& b) { return !(a == b); }

  void check_same_shape(const SymTensor& o) const;

 private:
  const MultisetBasis* basis_;
  std::vector<Scalar> v_;
};

using SymFn = SymTensor<FnTag>;
using SymMeasure = SymTensor<MeasureTag>;

extern template class SymTensor<FnTag>;
extern template class SymTensor<MeasureTag>;

Scalar pair(const SymMeasure& mu, const SymFn& f);

SymMeasure power_measure(const PointMeasure& omega, int n);
SymFn power_fn(const PointFn& xi, int n);
SymFn as_symfn(const PointFn& xi);
SymMeasure as_symmeasure(const PointMeasure& omega);

// f (.) g: average over all orderings of f(x_1..x_n) g(x_{n+1}..x_{n+k}).
SymFn sym_product_fn(const SymFn& f, const SymFn& g);
// Unique measure with pair(mu (.) nu, h) = <mu (x) nu, h> for every symmetric h.
SymMeasure sym_product_measure(const SymMeasure& mu, const SymMeasure& nu);
SymFn sym_product_all(const std::vector<PointFn>& xis);

// Composition (i_1..i_k) of n: value at y = Sym_y f(y_1^{i_1}, ..., y_k^{i_k}).
SymFn diag_embed(const SymFn& f, const std::vector<int>& composition);
// Set partition of {1..n} given as blocks of 1-based elements.
SymFn diag_partition(const SymFn& f, const std::vector<std::vector<int>>& blocks);
// Measure with pair(result, f) = sum_x omega_x f(x, ..., x).
SymMeasure diag_measure(const PointMeasure& omega, int i);

// (N(xi) f)(x) = f(x) * sum_j xi(x_j)
SymFn multiply_N(const PointFn& xi, const SymFn& f);
// pointwise product of same-rank functions
SymFn hadamard(const SymFn& f, const SymFn& g);
// f(alpha, .) as a function of the remaining rank(f) - |alpha| variables.
SymFn slice(const SymFn& f, const Counts& alpha);
// Symmetrization of G(a, b) = family(a)(b) where a ranges over multisets of size ra
// (family(a) symmetric of rank rb): result has rank ra + rb.
SymFn symmetrize_split(int m, int ra, int rb, const std::function<SymFn(const Counts&)>& family);

// Polynomial p(omega) = sum_k <omega^{(x)k}, f^(k)>; also a function on finite multisets.
struct GradedFn {
  int m = 1;
  std::vector<SymFn> comps;

  GradedFn(int m_, int degree);  // zero, components 0..degree
  static GradedFn constant(int m, const Scalar& c);
  static GradedFn monomial(const SymFn& f);

  int degree() const { return static_cast<int>(comps.size()) - 1; }
  const SymFn& operator[](int k) const { return comps.at(static_cast<std::size_t>(k)); }
  SymFn& operator[](int k) { return comps.at(static_cast<std::size_t>(k)); }
  void resize(int degree);
  // degree with trailing zero components stripped (0 for the zero polynomial)
  int effective_degree() const;

  GradedFn& operator+=(const GradedFn& o);
  GradedFn& operator-=(const GradedFn& o);
  GradedFn& operator*=(const Scalar& s);
  friend GradedFn operator+(GradedFn a, const GradedFn& b) { return a += b; }
  friend GradedFn operator-(GradedFn a, const GradedFn& b) { return a -= b; }
  friend GradedFn operator*(GradedFn a, const Scalar& s) { return a *= s; }
  // equality up to trailing zero components
  friend bool operator==(const GradedFn& a, const GradedFn& b);
  friend bool operator!=(const GradedFn& a, const GradedFn& b) { return !(a == b); }
  void add_component(const SymFn& f);
};

Scalar eval_polynomial(const GradedFn& p, const PointMeasure& omega);
Scalar eval_on_multiset(const GradedFn& f, const MultiIndex& eta);
Scalar eval_on_counts(const GradedFn& f, const Counts& eta);
GradedFn multiply_polynomials(const GradedFn& p, const GradedFn& q);
// Configuration eta as an integer-valued PointMeasure.
PointMeasure configuration(const Counts& eta);

}  // namespace spatial
