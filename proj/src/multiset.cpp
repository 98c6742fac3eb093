#include "spatial/multiset.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace spatial {

Counts to_counts(const MultiIndex& idx, int m) {
  Counts c(static_cast<std::size_t>(m), 0);
  for (Label x : idx) {
    if (x < 0 || x >= m) throw std::out_of_range("label out of range");
    ++c[static_cast<std::size_t>(x)];
  }
  return c;
}

MultiIndex from_counts(const Counts& c) {
  MultiIndex idx;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (int j = 0; j < c[x]; ++j) idx.push_back(static_cast<Label>(x));
  return idx;
}

bool is_canonical(const MultiIndex& idx, int m) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= m) return false;
    if (i > 0 && idx[i] < idx[i - 1]) return false;
  }
  return true;
}

Scalar perm_count(const Counts& c) {
  int n = 0;
  Scalar den(1);
  for (int v : c) {
    n += v;
    den *= factorial(static_cast<unsigned>(v));
  }
  return factorial(static_cast<unsigned>(n)) / den;
}

MultisetBasis::MultisetBasis(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 0) throw std::invalid_argument("invalid multiset basis shape");
  mc_.assign(static_cast<std::size_t>(m) + 1, std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, 0));
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= n; ++b) {
      if (b == 0) mc_[a][b] = 1;
      else if (a == 0) mc_[a][b] = 0;
      else mc_[a][b] = mc_[a][b - 1] + mc_[a - 1][b];  // first label used or not
    }
  MultiIndex cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, Label)> rec = [&](int pos, Label lo) {
    if (pos == n) {
      items_.push_back(cur);
      return;
    }
    for (Label v = lo; v < m; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  for (const auto& it : items_) {
    counts_.push_back(to_counts(it, m));
    perm_.push_back(spatial::perm_count(counts_.back()));
  }
}

std::size_t MultisetBasis::multichoose(int labels, int size) const {
  return mc_[static_cast<std::size_t>(labels)][static_cast<std::size_t>(size)];
}

std::size_t MultisetBasis::rank(const MultiIndex& sorted) const {
  if (static_cast<int>(sorted.size()) != n_) throw std::invalid_argument("multiset size mismatch");
  std::size_t r = 0;
  Label prev = 0;
  for (int p = 0; p < n_; ++p) {
    Label v = sorted[static_cast<std::size_t>(p)];
    if (v < prev || v >= m_) throw std::invalid_argument("multi-index not canonical");
    for (Label u = prev; u < v; ++u) r += multichoose(m_ - u, n_ - p - 1);
    prev = v;
  }
  return r;
}

std::size_t MultisetBasis::rank_counts(const Counts& c) const {
  if (static_cast<int>(c.size()) != m_) throw std::invalid_argument("counts length mismatch");
  std::size_t r = 0;
  Label prev = 0;
  int p = 0;
  for (Label v = 0; v < m_; ++v) {
    for (int j = 0; j < c[static_cast<std::size_t>(v)]; ++j, ++p) {
      for (Label u = prev; u < v; ++u) r += multichoose(m_ - u, n_ - p - 1);
      prev = v;
    }
  }
  if (p != n_) throw std::invalid_argument("multiset size mismatch");
  return r;
}

const MultisetBasis& MultisetBasis::get(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MultisetBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, n}];
  if (!slot) slot = std::make_unique<MultisetBasis>(m, n);
  return *slot;
}

void for_each_submultiset(const Counts& eta, int size,
                          const std::function<void(const Counts&, const Scalar&)>& fn) {
  Counts alpha(eta.size(), 0);
  std::vector<int> suffix(eta.size() + 1, 0);
  for (std::size_t x = eta.size(); x-- > 0;) suffix[x] = suffix[x + 1] + eta[x];
  std::function<void(std::size_t, int, const Scalar&)> rec = [&](std::size_t x, int left, const Scalar& w) {
    if (x == eta.size()) {
      if (left == 0) fn(alpha, w);
      return;
    }
    if (left > suffix[x]) return;
    int hi = std::min(eta[x], left);
    for (int a = 0; a <= hi; ++a) {
      alpha[x] = a;
      rec(x + 1, left - a, w * binomial(eta[x], a));
    }
    alpha[x] = 0;
  };
  rec(0, size, Scalar(1));
}

void for_each_submultiset_any(const Counts& eta,
                              const std::function<void(const Counts&, const Scalar&)>& fn) {
  int total = 0;
  for (int v : eta) total += v;
  for (int s = 0; s <= total; ++s) for_each_submultiset(eta, s, fn);
}

}  // namespace spatial
