#include "spatial/partition.hpp"

#include <algorithm>

namespace spatial {

void for_each_set_partition(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (n == 0) {
    if (k <= 0) fn({});
    return;
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int j, int blocks) {
    if (k >= 0 && blocks + (n - j) < k) return;  // cannot reach k blocks
    if (j == n) {
      if (k < 0 || blocks == k) fn(a);
      return;
    }
    int top = (k >= 0) ? std::min(blocks, k - 1) : blocks;
    for (int v = 0; v <= top; ++v) {
      a[static_cast<std::size_t>(j)] = v;
      rec(j + 1, std::max(blocks, v + 1));
    }
  };
  rec(1, 1);
}

std::vector<std::vector<int>> rgs_to_blocks(const std::vector<int>& rgs) {
  std::vector<std::vector<int>> blocks;
  for (std::size_t j = 0; j < rgs.size(); ++j) {
    auto b = static_cast<std::size_t>(rgs[j]);
    if (blocks.size() <= b) blocks.resize(b + 1);
    blocks[b].push_back(static_cast<int>(j) + 1);
  }
  return blocks;
}

std::vector<int> rgs_shape(const std::vector<int>& rgs) {
  std::vector<int> sizes;
  for (int v : rgs) {
    if (sizes.size() <= static_cast<std::size_t>(v)) sizes.resize(static_cast<std::size_t>(v) + 1, 0);
    ++sizes[static_cast<std::size_t>(v)];
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || n < 0) return out;
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int parts) {
    if (parts == 1) {
      if (left >= 1) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int i = 1; i <= left - (parts - 1); ++i) {
      cur.push_back(i);
      rec(left - i, parts - 1);
      cur.pop_back();
    }
  };
  rec(n, k);
  return out;
}

}  // namespace spatial
