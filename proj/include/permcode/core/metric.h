#pragma once

#include <utility>
#include <vector>

#include "permcode/core/permutation.h"

namespace permcode {

using OrderedPair = std::pair<int, int>;

// A(pi): the set of adjacent ordered pairs (pi(i), pi(i+1)). Stored sorted.
class CharacteristicSet {
 public:
  explicit CharacteristicSet(const Permutation& pi);

  const std::vector<OrderedPair>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  bool contains(const OrderedPair& p) const;

  friend bool operator==(const CharacteristicSet&, const CharacteristicSet&) = default;

 private:
  std::vector<OrderedPair> pairs_;
};

// Block permutation distance, computed as |A(pi1) \ A(pi2)|.
int BlockDistance(const Permutation& pi1, const Permutation& pi2);

// Number of adjacent pairs of pi that are not (v, v+1); equals BlockDistance(e, pi).
int BlockWeight(const Permutation& pi);

}  // namespace permcode
