#include "spatial/ground.hpp"

#include <stdexcept>

namespace spatial {

GroundSet::GroundSet(int m_, std::vector<std::string> names_) : m(m_), names(std::move(names_)) {
  if (m < 1) throw std::invalid_argument("ground set needs m >= 1");
  if (!names.empty() && static_cast<int>(names.size()) != m)
    throw std::invalid_argument("ground set names must have length m");
}

template <class Tag>
void PointVec<Tag>::check(const PointVec& o) const {
  if (o.w.size() != w.size()) throw std::invalid_argument("ground set mismatch");
}
template struct PointVec<MeasureTag>;
template struct PointVec<FnTag>;

PointMeasure delta(int m, Label x) {
  PointMeasure d(m);
  d[x] = Scalar(1);
  return d;
}

PointFn indicator(int m, Label x) {
  PointFn d(m);
  d[x] = Scalar(1);
  return d;
}

PointFn constant_fn(int m, const Scalar& c) {
  return PointFn(std::vector<Scalar>(static_cast<std::size_t>(m), c));
}

Scalar measure_eval(const PointMeasure& omega, const std::set<Label>& A) {
  Scalar s(0);
  for (Label x : A) {
    if (x < 0 || x >= omega.m()) throw std::out_of_range("label out of range");
    s += omega[x];
  }
  return s;
}

Scalar total_mass(const PointMeasure& omega) {
  Scalar s(0);
  for (const auto& v : omega.w) s += v;
  return s;
}

Scalar integrate(const PointMeasure& omega, const PointFn& xi) {
  if (omega.m() != xi.m()) throw std::invalid_argument("ground set mismatch");
  Scalar s(0);
  for (int x = 0; x < omega.m(); ++x) s += omega[x] * xi[x];
  return s;
}

PointFn pointwise(const PointFn& a, const PointFn& b) {
  a.check(b);
  PointFn r(a.m());
  for (int x = 0; x < a.m(); ++x) r[x] = a[x] * b[x];
  return r;
}

PointFn pointwise_pow(const PointFn& a, unsigned e) {
  PointFn r(a.m());
  for (int x = 0; x < a.m(); ++x) r[x] = a[x].pow(e);
  return r;
}

}  // namespace spatial
