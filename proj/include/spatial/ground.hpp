#pragma once

#include <set>
#include <string>
#include <vector>

#include "spatial/scalar.hpp"

namespace spatial {

using Label = int;

struct GroundSet {
  int m = 1;
  std::vector<std::string> names;  // optional, empty or of length m

  explicit GroundSet(int m_, std::vector<std::string> names_ = {});
  bool valid(Label x) const { return x >= 0 && x < m; }
  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.m == b.m; }
};

// Weight vector over the ground set. Measure and Fn tags keep omega and xi apart.
template <class Tag>
struct PointVec {
  std::vector<Scalar> w;

  PointVec() = default;
  explicit PointVec(int m) : w(static_cast<std::size_t>(m), Scalar(0)) {}
  explicit PointVec(std::vector<Scalar> values) : w(std::move(values)) {}

  int m() const { return static_cast<int>(w.size()); }
  const Scalar& operator[](Label x) const { return w.at(static_cast<std::size_t>(x)); }
  Scalar& operator[](Label x) { return w.at(static_cast<std::size_t>(x)); }

  PointVec& operator+=(const PointVec& o) {
    check(o);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += o.w[i];
    return *this;
  }
  PointVec& operator-=(const PointVec& o) {
    check(o);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= o.w[i];
    return *this;
  }
  PointVec& operator*=(const Scalar& s) {
    for (auto& v : w) v *= s;
    return *this;
  }
  friend PointVec operator+(PointVec a, const PointVec& b) { return a += b; }
  friend PointVec operator-(PointVec a, const PointVec& b) { return a -= b; }
  friend PointVec operator*(PointVec a, const Scalar& s) { return a *= s; }
  PointVec operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const PointVec& a, const PointVec& b) { return a.w == b.w; }

  void check(const PointVec& o) const;
};

struct MeasureTag {};
struct FnTag {};
using PointMeasure = PointVec<MeasureTag>;
using PointFn = PointVec<FnTag>;

PointMeasure delta(int m, Label x);
PointFn indicator(int m, Label x);
PointFn constant_fn(int m, const Scalar& c);

// omega(A)
Scalar measure_eval(const PointMeasure& omega, const std::set<Label>& A);
Scalar total_mass(const PointMeasure& omega);
// <omega, xi>
Scalar integrate(const PointMeasure& omega, const PointFn& xi);
// pointwise product and power
PointFn pointwise(const PointFn& a, const PointFn& b);
PointFn pointwise_pow(const PointFn& a, unsigned e);

}  // namespace spatial
