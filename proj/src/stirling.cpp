#include "spatial/stirling.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "spatial/factorial.hpp"
#include "spatial/partition.hpp"
#include "spatial/polyop.hpp"
#include "spatial/series.hpp"

namespace spatial {

OperatorKind parse_kind(const std::string& text) {
  if (text == "S") return OperatorKind::S2;
  if (text == "s") return OperatorKind::S1;
  if (text == "c") return OperatorKind::C1;
  if (text == "L") return OperatorKind::Lah;
  throw std::invalid_argument("unknown operator kind: " + text);
}

std::string kind_symbol(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::S2: return "S";
    case OperatorKind::S1: return "s";
    case OperatorKind::C1: return "c";
    case OperatorKind::Lah: return "L";
  }
  return "?";
}

namespace {

void check_args(int n, int k, const SymFn& f) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative operator index");
  if (f.rank() != n) throw std::invalid_argument("operand rank does not match n");
}

// Returns true (and sets out) for the conventional cases outside 1 <= k <= n.
bool edge_case(int n, int k, const SymFn& f, SymFn& out) {
  if (k == n) {
    out = f;
    return true;
  }
  if (k > n || k == 0) {
    out = SymFn(f.m(), k);
    return true;
  }
  return false;
}

// Block-size shapes of UP(n,k) with the number of set partitions of each shape.
using ShapeTable = std::vector<std::pair<std::vector<int>, long>>;

const ShapeTable& shape_table(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, ShapeTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  std::map<std::vector<int>, long> counts;
  for_each_set_partition(n, k, [&](const std::vector<int>& rgs) { ++counts[rgs_shape(rgs)]; });
  ShapeTable t(counts.begin(), counts.end());
  return cache.emplace(std::make_pair(n, k), std::move(t)).first->second;
}

Scalar shape_weight(OperatorKind kind, const std::vector<int>& shape) {
  Scalar w(1);
  for (int s : shape) {
    switch (kind) {
      case OperatorKind::S2: break;
      case OperatorKind::S1:
      case OperatorKind::C1: w *= factorial(static_cast<unsigned>(s - 1)); break;
      case OperatorKind::Lah: w *= factorial(static_cast<unsigned>(s)); break;
    }
  }
  return w;
}

Scalar sign_of(int e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace

SymFn apply_operator(OperatorKind kind, int n, int k, const SymFn& f) {
  check_args(n, k, f);
  SymFn out(f.m(), k);
  if (edge_case(n, k, f, out)) return out;
  for (const auto& [shape, count] : shape_table(n, k)) {
    Scalar w = shape_weight(kind, shape) * Scalar(count);
    out += diag_embed(f, shape) * w;
  }
  if (kind == OperatorKind::S1) out *= sign_of(n - k);
  return out;
}

SymFn apply_via_recurrence(OperatorKind kind, int n, int k, const SymFn& f) {
  if (kind != OperatorKind::S2 && kind != OperatorKind::S1)
    throw std::invalid_argument("recurrence route exists for S and s only");
  check_args(n, k, f);
  SymFn out(f.m(), k);
  if (edge_case(n, k, f, out)) return out;
  const int m = f.m();
  const int prev = n - 1;  // f has rank prev + 1
  std::vector<Counts> points;
  for (Label x = 0; x < m; ++x) {
    Counts c(static_cast<std::size_t>(m), 0);
    c[static_cast<std::size_t>(x)] = 1;
    points.push_back(c);
  }
  // P_k(1 (x) A(prev, k-1)) acting on f
  if (k >= 2) {
    std::vector<SymFn> g;
    for (Label x = 0; x < m; ++x) g.push_back(apply_via_recurrence(kind, prev, k - 1, slice(f, points[static_cast<std::size_t>(x)])));
    out += symmetrize_split(m, 1, k - 1, [&](const Counts& a) {
      for (Label x = 0; x < m; ++x)
        if (a[static_cast<std::size_t>(x)] == 1) return g[static_cast<std::size_t>(x)];
      throw std::logic_error("bad singleton");
    });
  }
  if (k <= prev) {
    if (kind == OperatorKind::S2) {
      // k P_k((D^(2) (x) 1)(1 (x) S(prev, k))): value at z is sum_x z_x g_x(z)
      std::vector<SymFn> g;
      for (Label x = 0; x < m; ++x) g.push_back(apply_via_recurrence(kind, prev, k, slice(f, points[static_cast<std::size_t>(x)])));
      const auto& b = out.basis();
      for (std::size_t i = 0; i < out.size(); ++i) {
        const Counts& z = b.counts(i);
        for (Label x = 0; x < m; ++x)
          if (z[static_cast<std::size_t>(x)] > 0) out[i] += Scalar(z[static_cast<std::size_t>(x)]) * g[static_cast<std::size_t>(x)][i];
      }
    } else {
      // -prev * s(prev, k) P_prev(D^(2) (x) 1) f, where P_prev(D^(2) (x) 1) f (z) = (1/prev) sum_x z_x f(z + x)
      SymFn h(m, prev);
      const auto& b = h.basis();
      Counts c(static_cast<std::size_t>(m));
      for (std::size_t i = 0; i < h.size(); ++i) {
        const Counts& z = b.counts(i);
        Scalar acc(0);
        for (Label x = 0; x < m; ++x) {
          if (z[static_cast<std::size_t>(x)] == 0) continue;
          c = z;
          ++c[static_cast<std::size_t>(x)];
          acc += Scalar(z[static_cast<std::size_t>(x)]) * f.at_counts(c);
        }
        h[i] = acc;
      }
      out -= apply_via_recurrence(kind, prev, k, h);
    }
  }
  return out;
}

SymFn apply_via_euler(int n, int k, const SymFn& f) {
  check_args(n, k, f);
  SymFn out(f.m(), k);
  if (edge_case(n, k, f, out)) return out;
  const int m = f.m();
  std::map<Counts, Scalar> moments;  // <eta^{(x)n}, f>
  auto moment = [&](const Counts& eta) -> const Scalar& {
    auto it = moments.find(eta);
    if (it != moments.end()) return it->second;
    return moments.emplace(eta, pair(power_measure(configuration(eta), n), f)).first->second;
  };
  const Scalar pre = sign_of(k) / factorial(static_cast<unsigned>(k));
  const auto& b = out.basis();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const MultiIndex& y = b.at(i);
    Scalar acc(0);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      Counts eta(static_cast<std::size_t>(m), 0);
      int size = 0;
      for (int j = 0; j < k; ++j)
        if (mask & (1u << j)) {
          ++eta[static_cast<std::size_t>(y[static_cast<std::size_t>(j)])];
          ++size;
        }
      if (size % 2 == 0) acc += moment(eta);
      else acc -= moment(eta);
    }
    out[i] = pre * acc;
  }
  return out;
}

SymFn apply_via_compositions(OperatorKind kind, int n, int k, const SymFn& f) {
  check_args(n, k, f);
  SymFn out(f.m(), k);
  if (edge_case(n, k, f, out)) return out;
  for (const auto& comp : compositions(n, k)) {
    Scalar w(1);
    for (int i : comp) {
      switch (kind) {
        case OperatorKind::S2: w /= factorial(static_cast<unsigned>(i)); break;
        case OperatorKind::S1:
        case OperatorKind::C1: w /= Scalar(i); break;
        case OperatorKind::Lah: break;
      }
    }
    out += diag_embed(f, comp) * w;
  }
  out *= factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(k));
  if (kind == OperatorKind::S1) out *= sign_of(n - k);
  return out;
}

std::shared_ptr<const OperatorMatrix> operator_matrix(OperatorKind kind, int n, int k, int m) {
  using Key = std::tuple<int, int, int, int>;
  static std::shared_mutex mu;
  static std::map<Key, std::shared_ptr<const OperatorMatrix>> cache;
  Key key{static_cast<int>(kind), n, k, m};
  {
    std::shared_lock<std::shared_mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto mat = std::make_shared<OperatorMatrix>();
  mat->kind = kind;
  mat->n = n;
  mat->k = k;
  mat->m = m;
  const auto& src = MultisetBasis::get(m, n);
  const auto& dst = MultisetBasis::get(m, k);
  mat->entry.assign(dst.size(), std::vector<Scalar>(src.size(), Scalar(0)));
  for (std::size_t b = 0; b < src.size(); ++b) {
    SymFn e(m, n);
    e[b] = Scalar(1);
    SymFn col = apply_operator(kind, n, k, e);
    for (std::size_t a = 0; a < dst.size(); ++a) mat->entry[a][b] = col[a];
  }
  std::unique_lock<std::shared_mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(mat));
  return it->second;
}

SymFn apply_matrix(const OperatorMatrix& a, const SymFn& f) {
  if (f.rank() != a.n || f.m() != a.m) throw std::invalid_argument("operand shape mismatch");
  SymFn out(a.m, a.k);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Scalar acc(0);
    for (std::size_t j = 0; j < f.size(); ++j)
      if (!a.entry[i][j].is_zero() && !f[j].is_zero()) acc += a.entry[i][j] * f[j];
    out[i] = acc;
  }
  return out;
}

SymMeasure adjoint_apply(OperatorKind kind, int n, int k, const SymMeasure& mu) {
  if (mu.rank() != k) throw std::invalid_argument("measure rank does not match k");
  const int m = mu.m();
  auto mat = operator_matrix(kind, n, k, m);
  SymMeasure out(m, n);
  const auto& src = MultisetBasis::get(m, n);
  const auto& dst = MultisetBasis::get(m, k);
  for (std::size_t b = 0; b < src.size(); ++b) {
    Scalar acc(0);
    for (std::size_t a = 0; a < dst.size(); ++a)
      if (!mu[a].is_zero() && !mat->entry[a][b].is_zero())
        acc += dst.perm_count(a) * mu[a] * mat->entry[a][b];
    out[b] = acc / src.perm_count(b);
  }
  return out;
}

std::vector<std::vector<Scalar>> classical_triangle(OperatorKind kind, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<std::vector<Scalar>> rows;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Scalar> row;
    SymFn one = SymFn::constant(1, n, Scalar(1));
    for (int k = 0; k <= n; ++k) row.push_back(apply_operator(kind, n, k, one)[0]);
    rows.push_back(std::move(row));
  }
  return rows;
}

Report check_routes(int n, int k, const SymFn& f) {
  Report r("routes");
  const std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
  SymFn s2 = apply_operator(OperatorKind::S2, n, k, f);
  r.expect_equal(s2, apply_via_recurrence(OperatorKind::S2, n, k, f), "S partition vs recurrence" + tag);
  r.expect_equal(s2, apply_via_euler(n, k, f), "S partition vs Euler" + tag);
  r.expect_equal(s2, apply_via_compositions(OperatorKind::S2, n, k, f), "S partition vs compositions" + tag);
  SymFn s1 = apply_operator(OperatorKind::S1, n, k, f);
  r.expect_equal(s1, apply_via_recurrence(OperatorKind::S1, n, k, f), "s partition vs recurrence" + tag);
  r.expect_equal(s1, apply_operator(OperatorKind::C1, n, k, f) * sign_of(n - k), "sign law" + tag);
  for (auto kind : {OperatorKind::C1, OperatorKind::Lah})
    r.expect_equal(apply_operator(kind, n, k, f), apply_via_compositions(kind, n, k, f),
                   kind_symbol(kind) + " partition vs compositions" + tag);
  return r;
}

Report check_expansions(int n, const PointMeasure& omega, const SymFn& f) {
  Report r("expansions");
  if (f.rank() != n) throw std::invalid_argument("probe rank does not match n");
  Scalar via_s(0), via_S(0), via_c(0);
  SymMeasure adj_s(omega.m(), n), adj_S(omega.m(), n);
  for (int k = 0; k <= n; ++k) {
    via_s += pair(power_measure(omega, k), apply_operator(OperatorKind::S1, n, k, f));
    via_c += pair(power_measure(omega, k), apply_operator(OperatorKind::C1, n, k, f));
    via_S += pair(falling(omega, k), apply_operator(OperatorKind::S2, n, k, f));
    if (k >= 1 || n == 0) {
      adj_s += adjoint_apply(OperatorKind::S1, n, k, power_measure(omega, k));
      adj_S += adjoint_apply(OperatorKind::S2, n, k, falling(omega, k));
    }
  }
  const std::string tag = " n=" + std::to_string(n);
  r.expect_equal(pair(falling(omega, n), f), via_s, "falling via s" + tag);
  r.expect_equal(pair(power_measure(omega, n), f), via_S, "power via S" + tag);
  r.expect_equal(pair(rising(omega, n), f), via_c, "rising via c" + tag);
  r.expect_equal(adj_s, falling(omega, n), "adjoint s expansion" + tag);
  r.expect_equal(adj_S, power_measure(omega, n), "adjoint S expansion" + tag);
  return r;
}

Report check_sign_law(int n, int k, int m) {
  Report r("sign_law");
  auto s = operator_matrix(OperatorKind::S1, n, k, m);
  auto c = operator_matrix(OperatorKind::C1, n, k, m);
  Scalar sg = sign_of(n - k);
  bool ok = true;
  for (std::size_t a = 0; a < s->entry.size(); ++a)
    for (std::size_t b = 0; b < s->entry[a].size(); ++b)
      if (s->entry[a][b] != sg * c->entry[a][b]) ok = false;
  r.expect(ok, "s = (-1)^{n-k} c entrywise n=" + std::to_string(n) + " k=" + std::to_string(k));
  return r;
}

Report check_orthogonality(int n, int i, const PointFn& xi, const PointMeasure& omega) {
  if (n < 1 || i < 1) throw std::invalid_argument("orthogonality needs n, i >= 1");
  Report r("orthogonality");
  const int m = xi.m();
  SymFn f = power_fn(xi, n);
  SymFn expect = (i == n) ? f : SymFn(m, i);
  SymFn sS(m, i), Ss(m, i);
  for (int k = i; k <= n; ++k) {
    sS += apply_operator(OperatorKind::S1, k, i, apply_operator(OperatorKind::S2, n, k, f));
    Ss += apply_operator(OperatorKind::S2, k, i, apply_operator(OperatorKind::S1, n, k, f));
  }
  const std::string tag = " n=" + std::to_string(n) + " i=" + std::to_string(i);
  r.expect_equal(sS, expect, "sum_k s(k,i)S(n,k)" + tag);
  r.expect_equal(Ss, expect, "sum_k S(k,i)s(n,k)" + tag);
  SymMeasure w = power_measure(omega, i);
  r.expect_equal(pair(w, sS), pair(w, expect), "paired sum_k s(k,i)S(n,k)" + tag);
  return r;
}

// z-series of <omega, phi(z xi)> where phi is built per point from a series in z.
static ScalarSeries pointwise_series(const PointMeasure& omega, const PointFn& xi, int N,
                                     OperatorKind kind) {
  ScalarSeries total(N);
  for (Label x = 0; x < xi.m(); ++x) {
    ScalarSeries t = ScalarSeries::variable(N) * xi[x];
    ScalarSeries s(N);
    switch (kind) {
      case OperatorKind::S2: {
        s = series_exp(t);
        s[0] = Scalar(0);
        break;
      }
      case OperatorKind::S1: s = series_log1p(t); break;
      case OperatorKind::C1: s = series_log1p(t * Scalar(-1)) * Scalar(-1); break;
      case OperatorKind::Lah: {
        ScalarSeries one_minus = t * Scalar(-1);
        one_minus[0] = Scalar(1);
        s = t * series_reciprocal(one_minus);
        break;
      }
    }
    total += s * omega[x];
  }
  return total;
}

Report check_genfun_stirling(OperatorKind kind, int k, const PointFn& xi, int N,
                             const PointMeasure& omega) {
  if (k < 1 || N < k) throw std::invalid_argument("generating function needs 1 <= k <= N");
  Report r("genfun_" + kind_symbol(kind));
  ScalarSeries lhs(N);
  SymMeasure wk = power_measure(omega, k);
  for (int n = k; n <= N; ++n)
    lhs[n] = pair(wk, apply_operator(kind, n, k, power_fn(xi, n))) / factorial(static_cast<unsigned>(n));
  ScalarSeries rhs = pointwise_series(omega, xi, N, kind).pow(static_cast<unsigned>(k)) *
                     (Scalar(1) / factorial(static_cast<unsigned>(k)));
  r.expect_equal(lhs, rhs, kind_symbol(kind) + " generating function k=" + std::to_string(k));
  return r;
}

Report check_lah(int n, int k, const PointMeasure& omega, const PointFn& xi) {
  if (n < 1 || k < 1) throw std::invalid_argument("Lah check needs n, k >= 1");
  Report r("lah");
  const int m = xi.m();
  const std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
  SymFn f = power_fn(xi, n);
  Scalar via(0);
  for (int j = 0; j <= n; ++j) via += pair(falling(omega, j), apply_operator(OperatorKind::Lah, n, j, f));
  r.expect_equal(pair(rising(omega, n), f), via, "rising via Lah" + tag);

  SymFn comp(m, k);
  for (int i = k; i <= n; ++i)
    comp += apply_operator(OperatorKind::S2, i, k, apply_operator(OperatorKind::C1, n, i, f));
  r.expect_equal(apply_operator(OperatorKind::Lah, n, k, f), comp, "L = sum S c" + tag);

  if (k <= n) r.merge(check_genfun_stirling(OperatorKind::Lah, k, xi, n, omega));

  SymFn inv(m, k);
  for (int j = k; j <= n; ++j)
    inv += apply_operator(OperatorKind::Lah, j, k, apply_operator(OperatorKind::Lah, n, j, f)) * sign_of(n - j);
  r.expect_equal(inv, (n == k) ? f : SymFn(m, k), "Lah involution" + tag);
  return r;
}

Report check_olson(int n, int m_extra, int i, const SymFn& f) {
  if (n < 1 || m_extra < 0 || i < 1) throw std::invalid_argument("invalid Olson parameters");
  const int l = n + m_extra;
  if (f.rank() != l) throw std::invalid_argument("Olson probe must have rank n + m_extra");
  Report r("olson");
  const int m = f.m();
  const std::string tag = " n=" + std::to_string(n) + " m=" + std::to_string(m_extra) + " i=" + std::to_string(i);

  SymFn lhs(m, i);
  for (int k = 1; k <= n; ++k) {
    SymFn inner = symmetrize_split(m, m_extra, k, [&](const Counts& a) {
      return apply_operator(OperatorKind::S1, n, k, slice(f, a));
    });
    lhs += apply_operator(OperatorKind::S2, k + m_extra, i, inner);
  }

  SymFn rhs(m, i);
  const Scalar pre = sign_of(i) / factorial(static_cast<unsigned>(i));
  const auto& b = rhs.basis();
  for (std::size_t t = 0; t < rhs.size(); ++t) {
    Scalar acc(0);
    for (int size = n; size <= i; ++size) {
      for_each_submultiset(b.counts(t), size, [&](const Counts& eta, const Scalar& w) {
        PointMeasure g = configuration(eta);
        Scalar v = pair(sym_product_measure(falling(g, n), power_measure(g, m_extra)), f);
        acc += (size % 2 == 0 ? w : -w) * v;
      });
    }
    rhs[t] = pre * acc;
  }
  r.expect_equal(lhs, rhs, "Olson identity" + tag);
  if (i < n || i > l) {
    r.expect_equal(lhs, SymFn(m, i), "Olson LHS vanishes" + tag);
    r.expect_equal(rhs, SymFn(m, i), "Olson RHS vanishes" + tag);
  }
  if (i == n) {
    SymFn direct(m, i);
    for (std::size_t t = 0; t < direct.size(); ++t) {
      const Counts& x = b.counts(t);
      direct[t] = pair(power_measure(configuration(x), m_extra), slice(f, x));
    }
    r.expect_equal(rhs, direct, "Olson i=n double sum" + tag);
  }
  return r;
}

// P_{i+j}(A(k,i) (x) A(n-k,j)) f
static SymFn split_apply(OperatorKind kind, int n, int k, int i, int j, const SymFn& f) {
  const int m = f.m();
  const auto& bk = MultisetBasis::get(m, k);
  std::vector<SymFn> g;  // g[alpha] = A(n-k, j) f(alpha, .)
  for (std::size_t a = 0; a < bk.size(); ++a) g.push_back(apply_operator(kind, n - k, j, slice(f, bk.counts(a))));
  return symmetrize_split(m, j, i, [&](const Counts& beta) {
    SymFn h(m, k);
    for (std::size_t a = 0; a < bk.size(); ++a) h[a] = g[a].at_counts(beta);
    return apply_operator(kind, k, i, h);
  });
}

Report check_convolution_identity(int n, int i, int j, const SymFn& f) {
  if (i < 0 || j < 0 || i + j > n) throw std::invalid_argument("convolution needs 0 <= i, 0 <= j <= n - i");
  if (f.rank() != n) throw std::invalid_argument("probe rank does not match n");
  Report r("convolution");
  const std::string tag = " n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
  for (auto kind : {OperatorKind::S1, OperatorKind::S2, OperatorKind::Lah}) {
    SymFn lhs = apply_operator(kind, n, i + j, f) * binomial(i + j, i);
    SymFn rhs(f.m(), i + j);
    for (int k = i; k <= n - j; ++k) rhs += split_apply(kind, n, k, i, j, f) * binomial(n, k);
    r.expect_equal(lhs, rhs, kind_symbol(kind) + " convolution" + tag);
  }
  return r;
}

Report check_convolution_identity(int n, int i, int j, const PointFn& xi) {
  return check_convolution_identity(n, i, j, power_fn(xi, n));
}

static SymFn neg_derivative_power(const SymFn& f, Label x, int k) {
  SymFn g = f;
  for (int t = 0; t < k; ++t) g = point_derivative(g, x) * Scalar(-1);
  return g;
}

Report check_shift_identity(int n, int i, Label x, const PointFn& xi) {
  if (i < 1 || i >= n) throw std::invalid_argument("shift identity needs 1 <= i < n");
  Report r("shift");
  const int m = xi.m();
  const std::string tag = " n=" + std::to_string(n) + " i=" + std::to_string(i) + " x=" + std::to_string(x);
  SymFn f = power_fn(xi, n);
  SymFn ls(m, i), rs(m, i), lS(m, i), rS(m, i);
  for (int k = 1; k <= n - i; ++k) {
    Scalar inv = Scalar(1) / factorial(static_cast<unsigned>(k));
    ls += neg_derivative_power(apply_operator(OperatorKind::S1, n, i + k, f), x, k) * inv;
    rs += apply_operator(OperatorKind::S1, n - k, i, neg_derivative_power(f, x, k));
    lS += neg_derivative_power(apply_operator(OperatorKind::S2, n, i + k, f), x, k);
    rS += apply_operator(OperatorKind::S2, n - k, i, neg_derivative_power(f, x, k)) * inv;
  }
  r.expect_equal(ls, rs, "s shift" + tag);
  r.expect_equal(lS, rS, "S shift" + tag);
  return r;
}

}  // namespace spatial
