#pragma once

#include <functional>
#include <vector>

namespace spatial {

// Restricted-growth string a_1..a_n (a_1 = 0, a_{j+1} <= 1 + max_{i<=j} a_i):
// element j lies in block a_j. Calls fn for each set partition of {1..n} into
// exactly k blocks (k < 0: any number of blocks).
void for_each_set_partition(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> rgs_to_blocks(const std::vector<int>& rgs);
// block sizes sorted ascending
std::vector<int> rgs_shape(const std::vector<int>& rgs);

// All compositions (i_1..i_k) of n with positive parts.
std::vector<std::vector<int>> compositions(int n, int k);

}  // namespace spatial
