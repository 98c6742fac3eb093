#include "spatial/symtensor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spatial {

template <class Tag>
SymTensor<Tag>::SymTensor(int m, int rank) : basis_(&MultisetBasis::get(m, rank)) {
  v_.assign(basis_->size(), Scalar(0));
}

template <class Tag>
SymTensor<Tag> SymTensor<Tag>::constant(int m, int rank, const Scalar& c) {
  SymTensor t(m, rank);
  for (auto& v : t.v_) v = c;
  return t;
}

template <class Tag>
bool SymTensor<Tag>::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_zero(); });
}

template <class Tag>
void SymTensor<Tag>::check_same_shape(const SymTensor& o) const {
  if (m() != o.m()) throw std::invalid_argument("ground set mismatch");
  if (rank() != o.rank()) throw std::invalid_argument("rank mismatch");
}

template <class Tag>
SymTensor<Tag>& SymTensor<Tag>::operator+=(const SymTensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

template <class Tag>
SymTensor<Tag>& SymTensor<Tag>::operator-=(const SymTensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

template <class Tag>
SymTensor<Tag>& SymTensor<Tag>::operator*=(const Scalar& s) {
  for (auto& v : v_) v *= s;
  return *this;
}

template class SymTensor<FnTag>;
template class SymTensor<MeasureTag>;

Scalar pair(const SymMeasure& mu, const SymFn& f) {
  if (mu.m() != f.m()) throw std::invalid_argument("ground set mismatch");
  if (mu.rank() != f.rank()) throw std::invalid_argument("rank mismatch");
  Scalar s(0);
  const auto& b = f.basis();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (mu[i].is_zero() || f[i].is_zero()) continue;
    s += b.perm_count(i) * mu[i] * f[i];
  }
  return s;
}

template <class T, class V>
static T power_tensor(const V& w, int n) {
  if (n < 0) throw std::invalid_argument("negative rank");
  T t(w.m(), n);
  const auto& b = t.basis();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Scalar p(1);
    for (Label x : b.at(i)) p *= w[x];
    t[i] = p;
  }
  return t;
}

SymMeasure power_measure(const PointMeasure& omega, int n) {
  return power_tensor<SymMeasure>(omega, n);
}
SymFn power_fn(const PointFn& xi, int n) { return power_tensor<SymFn>(xi, n); }
SymFn as_symfn(const PointFn& xi) { return power_fn(xi, 1); }
SymMeasure as_symmeasure(const PointMeasure& omega) { return power_measure(omega, 1); }

template <class T>
static T sym_product(const T& f, const T& g) {
  if (f.m() != g.m()) throw std::invalid_argument("ground set mismatch");
  const int n = f.rank(), k = g.rank();
  T r(f.m(), n + k);
  const Scalar norm = binomial(n + k, n);
  const auto& b = r.basis();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Counts& eta = b.counts(i);
    Scalar acc(0);
    for_each_submultiset(eta, n, [&](const Counts& alpha, const Scalar& w) {
      const Scalar& fa = f.at_counts(alpha);
      if (fa.is_zero()) return;
      Counts rest(eta);
      for (std::size_t x = 0; x < rest.size(); ++x) rest[x] -= alpha[x];
      const Scalar& gb = g.at_counts(rest);
      if (!gb.is_zero()) acc += w * fa * gb;
    });
    r[i] = acc / norm;
  }
  return r;
}

SymFn sym_product_fn(const SymFn& f, const SymFn& g) { return sym_product(f, g); }
SymMeasure sym_product_measure(const SymMeasure& mu, const SymMeasure& nu) {
  return sym_product(mu, nu);
}

SymFn sym_product_all(const std::vector<PointFn>& xis) {
  if (xis.empty()) throw std::invalid_argument("empty product");
  SymFn r = as_symfn(xis.front());
  for (std::size_t i = 1; i < xis.size(); ++i) r = sym_product_fn(r, as_symfn(xis[i]));
  return r;
}

SymFn diag_embed(const SymFn& f, const std::vector<int>& composition) {
  const int n = f.rank();
  const int k = static_cast<int>(composition.size());
  int total = 0;
  for (int i : composition) {
    if (i < 1) throw std::invalid_argument("composition parts must be >= 1");
    total += i;
  }
  if (total != n) throw std::invalid_argument("composition does not sum to rank");
  std::vector<int> parts(composition);
  std::sort(parts.begin(), parts.end());
  // Each distinct arrangement of the parts stands for prod(c_s!) permutations.
  Scalar weight(1);
  for (std::size_t a = 0; a < parts.size();) {
    std::size_t b = a;
    while (b < parts.size() && parts[b] == parts[a]) ++b;
    weight *= factorial(static_cast<unsigned>(b - a));
    a = b;
  }
  weight /= factorial(static_cast<unsigned>(k));
  std::vector<std::vector<int>> arrangements;
  do {
    arrangements.push_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));

  SymFn r(f.m(), k);
  const auto& b = r.basis();
  Counts c(static_cast<std::size_t>(f.m()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    const MultiIndex& y = b.at(i);
    Scalar acc(0);
    for (const auto& arr : arrangements) {
      std::fill(c.begin(), c.end(), 0);
      for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(y[static_cast<std::size_t>(j)])] += arr[static_cast<std::size_t>(j)];
      acc += f.at_counts(c);
    }
    r[i] = acc * weight;
  }
  return r;
}

SymFn diag_partition(const SymFn& f, const std::vector<std::vector<int>>& blocks) {
  const int n = f.rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> sizes;
  for (const auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("empty block in partition");
    for (int e : blk) {
      if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
        throw std::invalid_argument("invalid set partition");
      seen[static_cast<std::size_t>(e)] = true;
    }
    sizes.push_back(static_cast<int>(blk.size()));
  }
  for (int e = 1; e <= n; ++e)
    if (!seen[static_cast<std::size_t>(e)]) throw std::invalid_argument("partition misses an element");
  return diag_embed(f, sizes);
}

SymMeasure diag_measure(const PointMeasure& omega, int i) {
  if (i < 1) throw std::invalid_argument("diagonal measure needs i >= 1");
  SymMeasure r(omega.m(), i);
  for (Label x = 0; x < omega.m(); ++x) r.at(MultiIndex(static_cast<std::size_t>(i), x)) = omega[x];
  return r;
}

SymFn multiply_N(const PointFn& xi, const SymFn& f) {
  if (f.rank() < 1) throw std::invalid_argument("multiply_N needs rank >= 1");
  if (xi.m() != f.m()) throw std::invalid_argument("ground set mismatch");
  SymFn r(f);
  const auto& b = r.basis();
  for (std::size_t i = 0; i < r.size(); ++i) {
    Scalar s(0);
    for (Label x : b.at(i)) s += xi[x];
    r[i] *= s;
  }
  return r;
}

SymFn hadamard(const SymFn& f, const SymFn& g) {
  f.check_same_shape(g);
  SymFn r(f);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] *= g[i];
  return r;
}

SymFn slice(const SymFn& f, const Counts& alpha) {
  int a = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (a > f.rank()) throw std::invalid_argument("slice larger than rank");
  SymFn r(f.m(), f.rank() - a);
  const auto& b = r.basis();
  Counts c(alpha.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Counts& ci = b.counts(i);
    for (std::size_t x = 0; x < c.size(); ++x) c[x] = ci[x] + alpha[x];
    r[i] = f.at_counts(c);
  }
  return r;
}

SymFn symmetrize_split(int m, int ra, int rb, const std::function<SymFn(const Counts&)>& family) {
  const auto& ba = MultisetBasis::get(m, ra);
  std::vector<SymFn> fam;
  fam.reserve(ba.size());
  for (std::size_t i = 0; i < ba.size(); ++i) {
    fam.push_back(family(ba.counts(i)));
    if (fam.back().rank() != rb || fam.back().m() != m)
      throw std::invalid_argument("family member has wrong shape");
  }
  SymFn r(m, ra + rb);
  const Scalar norm = binomial(ra + rb, ra);
  const auto& b = r.basis();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Counts& z = b.counts(i);
    Scalar acc(0);
    for_each_submultiset(z, ra, [&](const Counts& alpha, const Scalar& w) {
      Counts rest(z);
      for (std::size_t x = 0; x < rest.size(); ++x) rest[x] -= alpha[x];
      const Scalar& v = fam[ba.rank_counts(alpha)].at_counts(rest);
      if (!v.is_zero()) acc += w * v;
    });
    r[i] = acc / norm;
  }
  return r;
}

GradedFn::GradedFn(int m_, int degree) : m(m_) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  for (int k = 0; k <= degree; ++k) comps.emplace_back(m, k);
}

GradedFn GradedFn::constant(int m, const Scalar& c) {
  GradedFn p(m, 0);
  p.comps[0][0] = c;
  return p;
}

GradedFn GradedFn::monomial(const SymFn& f) {
  GradedFn p(f.m(), f.rank());
  p.comps[static_cast<std::size_t>(f.rank())] = f;
  return p;
}

void GradedFn::resize(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  while (this->degree() < degree) comps.emplace_back(m, this->degree() + 1);
  while (this->degree() > degree) comps.pop_back();
}

int GradedFn::effective_degree() const {
  for (int k = degree(); k > 0; --k)
    if (!comps[static_cast<std::size_t>(k)].is_zero()) return k;
  return 0;
}

GradedFn& GradedFn::operator+=(const GradedFn& o) {
  if (o.m != m) throw std::invalid_argument("ground set mismatch");
  if (o.degree() > degree()) resize(o.degree());
  for (int k = 0; k <= o.degree(); ++k) comps[static_cast<std::size_t>(k)] += o[k];
  return *this;
}

GradedFn& GradedFn::operator-=(const GradedFn& o) {
  if (o.m != m) throw std::invalid_argument("ground set mismatch");
  if (o.degree() > degree()) resize(o.degree());
  for (int k = 0; k <= o.degree(); ++k) comps[static_cast<std::size_t>(k)] -= o[k];
  return *this;
}

GradedFn& GradedFn::operator*=(const Scalar& s) {
  for (auto& c : comps) c *= s;
  return *this;
}

bool operator==(const GradedFn& a, const GradedFn& b) {
  if (a.m != b.m) return false;
  int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) {
    bool za = k > a.degree(), zb = k > b.degree();
    if (za && zb) continue;
    if (za) {
      if (!b[k].is_zero()) return false;
    } else if (zb) {
      if (!a[k].is_zero()) return false;
    } else if (a[k] != b[k]) {
      return false;
    }
  }
  return true;
}

void GradedFn::add_component(const SymFn& f) {
  if (f.m() != m) throw std::invalid_argument("ground set mismatch");
  if (f.rank() > degree()) resize(f.rank());
  comps[static_cast<std::size_t>(f.rank())] += f;
}

Scalar eval_polynomial(const GradedFn& p, const PointMeasure& omega) {
  if (p.m != omega.m()) throw std::invalid_argument("ground set mismatch");
  Scalar s(0);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k].is_zero()) continue;
    s += pair(power_measure(omega, k), p[k]);
  }
  return s;
}

Scalar eval_on_multiset(const GradedFn& f, const MultiIndex& eta) {
  MultiIndex sorted(eta);
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(sorted.size()) > f.degree()) {
    throw std::invalid_argument("multiset larger than degree");
  }
  return f[static_cast<int>(sorted.size())].at(sorted);
}

Scalar eval_on_counts(const GradedFn& f, const Counts& eta) {
  int n = std::accumulate(eta.begin(), eta.end(), 0);
  if (n > f.degree()) return Scalar(0);
  return f[n].at_counts(eta);
}

GradedFn multiply_polynomials(const GradedFn& p, const GradedFn& q) {
  if (p.m != q.m) throw std::invalid_argument("ground set mismatch");
  GradedFn r(p.m, p.degree() + q.degree());
  for (int a = 0; a <= p.degree(); ++a) {
    if (p[a].is_zero()) continue;
    for (int b = 0; b <= q.degree(); ++b) {
      if (q[b].is_zero()) continue;
      r[a + b] += sym_product_fn(p[a], q[b]);
    }
  }
  return r;
}

PointMeasure configuration(const Counts& eta) {
  PointMeasure g(static_cast<int>(eta.size()));
  for (std::size_t x = 0; x < eta.size(); ++x) g[static_cast<Label>(x)] = Scalar(static_cast<long>(eta[x]));
  return g;
}

}  // namespace spatial
