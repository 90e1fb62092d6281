#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "permcode/core/permutation.h"

namespace permcode {

// Counter-based generator: the i-th output is SplitMix64's mixing function applied
// to key + i * golden_gamma, so a (seed, stream, counter) triple fixes every draw.
// Bounded draws use rejection, keeping results identical across standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Uniform in [0, bound); bound > 0.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform in [lo, hi].
  int UniformInt(int lo, int hi);

  // Independent generator for sub-stream `stream` (e.g. one per trial).
  Rng Fork(std::uint64_t stream) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

Permutation RandomPermutation(int n, Rng& rng);

// `count` distinct values from [1, universe], ascending (Floyd's sampling).
std::vector<int> SampleSubset(int universe, int count, Rng& rng);

}  // namespace permcode
