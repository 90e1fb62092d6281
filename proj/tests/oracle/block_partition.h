#pragma once

// Block distance by brute force: the fewest cuts of pi1 such that some minimal
// reordering of the pieces yields pi2. Independent of the characteristic-set formula.

#include <algorithm>
#include <numeric>
#include <vector>

#include "permcode/core/permutation.h"

namespace permcode::oracle {

inline bool IsMinimalOrder(const std::vector<int>& sigma) {
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    if (sigma[i + 1] == sigma[i] + 1) return false;
  }
  return true;
}

inline int PartitionBlockDistance(const Permutation& pi1, const Permutation& pi2) {
  const int n = pi1.size();
  const std::vector<int> target(pi2.entries().begin(), pi2.entries().end());
  for (int d = 0; d < n; ++d) {
    // Choose d cut points among the n - 1 gaps.
    std::vector<bool> mask(n - 1, false);
    std::fill(mask.begin(), mask.begin() + d, true);
    do {
      std::vector<std::vector<int>> blocks(1);
      for (int i = 1; i <= n; ++i) {
        blocks.back().push_back(pi1(i));
        if (i < n && mask[i - 1]) blocks.emplace_back();
      }
      std::vector<int> sigma(d + 1);
      std::iota(sigma.begin(), sigma.end(), 1);
      do {
        if (!IsMinimalOrder(sigma)) continue;
        std::vector<int> joined;
        for (int b : sigma) joined.insert(joined.end(), blocks[b - 1].begin(), blocks[b - 1].end());
        if (joined == target) return d;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return -1;
}

}  // namespace permcode::oracle
