#include "permcode/core/metric.h"

#include <algorithm>

#include "permcode/core/error.h"

namespace permcode {

CharacteristicSet::CharacteristicSet(const Permutation& pi) {
  pairs_.reserve(pi.size() - 1);
  for (int i = 1; i < pi.size(); ++i) pairs_.emplace_back(pi(i), pi(i + 1));
  std::sort(pairs_.begin(), pairs_.end());
}

bool CharacteristicSet::contains(const OrderedPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

int BlockDistance(const Permutation& pi1, const Permutation& pi2) {
  if (pi1.size() != pi2.size()) {
    throw ParameterError("block distance: length mismatch");
  }
  const int n = pi1.size();
  // successor[v] = symbol after v in pi2, 0 for the last symbol.
  std::vector<int> successor(n + 1, 0);
  for (int i = 1; i < n; ++i) successor[pi2(i)] = pi2(i + 1);
  int distance = 0;
  for (int i = 1; i < n; ++i) {
    if (successor[pi1(i)] != pi1(i + 1)) ++distance;
  }
  return distance;
}

int BlockWeight(const Permutation& pi) {
  int weight = 0;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi(i + 1) != pi(i) + 1) ++weight;
  }
  return weight;
}

}  // namespace permcode
