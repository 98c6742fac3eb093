#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "spatial/ground.hpp"
#include "spatial/scalar.hpp"

namespace spatial {

// Sorted, non-decreasing tuple of labels.
using MultiIndex = std::vector<Label>;
// Multiplicity vector of length m.
using Counts = std::vector<int>;

Counts to_counts(const MultiIndex& idx, int m);
MultiIndex from_counts(const Counts& c);
bool is_canonical(const MultiIndex& idx, int m);
// n!/prod(mult!)
Scalar perm_count(const Counts& c);

// All multisets of size n over m labels, in lexicographic order of sorted tuples.
// Instances are shared and immutable; get() is safe to call from several threads.
class MultisetBasis {
 public:
  static const MultisetBasis& get(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  std::size_t size() const { return items_.size(); }
  const MultiIndex& at(std::size_t i) const { return items_[i]; }
  const Counts& counts(std::size_t i) const { return counts_[i]; }
  const Scalar& perm_count(std::size_t i) const { return perm_[i]; }
  std::size_t rank(const MultiIndex& sorted) const;
  std::size_t rank_counts(const Counts& c) const;

  MultisetBasis(int m, int n);

 private:
  std::size_t multichoose(int labels, int size) const;

  int m_, n_;
  std::vector<MultiIndex> items_;
  std::vector<Counts> counts_;
  std::vector<Scalar> perm_;
  std::vector<std::vector<std::size_t>> mc_;  // mc_[a][b] = C(a+b-1, b)
};

// Calls fn(alpha, weight) for each sub-multiset alpha of eta with |alpha| = size,
// where weight = prod_x C(eta_x, alpha_x) counts the position subsets giving alpha.
void for_each_submultiset(const Counts& eta, int size,
                          const std::function<void(const Counts&, const Scalar&)>& fn);
// Calls fn(alpha) for every sub-multiset of eta (all sizes), with the weight as above.
void for_each_submultiset_any(const Counts& eta,
                              const std::function<void(const Counts&, const Scalar&)>& fn);

}  // namespace spatial
