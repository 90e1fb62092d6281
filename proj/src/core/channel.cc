#include "permcode/core/channel.h"

#include <string>
#include <vector>

#include "permcode/core/error.h"

namespace permcode {

GeneralizedTransposition RandomTransposition(int n, Rng& rng) {
  if (n < 2) throw ParameterError("generalized transpositions need length >= 2");
  // (i1, j1 + 1, i2 + 1, j2 + 2) is a bijection onto the 4-subsets of [n + 2].
  const std::vector<int> s = SampleSubset(n + 2, 4, rng);
  return {s[0], s[1] - 1, s[2] - 1, s[3] - 2};
}

Permutation ChannelCayley(const Permutation& pi, int t, Rng& rng) {
  if (t < 0) throw ParameterError("channel: error count must be >= 0");
  Permutation out = pi;
  for (int i = 0; i < t; ++i) {
    out = Compose(out, MakeTransposition(pi.size(), RandomTransposition(pi.size(), rng)));
  }
  return out;
}

Permutation ChannelCayley(const Permutation& pi, int t, std::uint64_t seed) {
  Rng rng(seed);
  return ChannelCayley(pi, t, rng);
}

Permutation ChannelBlock(const Permutation& pi, int d, Rng& rng) {
  const int n = pi.size();
  if (d < 0 || d >= n) {
    throw ParameterError("block channel requires 0 <= d < N (d=" + std::to_string(d) + ")");
  }
  if (d == 0) return pi;
  const std::vector<int> cuts = SampleSubset(n - 1, d, rng);
  std::vector<std::vector<int>> blocks;
  int start = 1;
  for (int cut : cuts) {
    blocks.emplace_back(pi.entries().begin() + (start - 1), pi.entries().begin() + cut);
    start = cut + 1;
  }
  blocks.emplace_back(pi.entries().begin() + (start - 1), pi.entries().end());

  Permutation order = RandomPermutation(d + 1, rng);
  while (!IsMinimal(order)) order = RandomPermutation(d + 1, rng);

  std::vector<int> out;
  out.reserve(n);
  for (int b : order.entries()) out.insert(out.end(), blocks[b - 1].begin(), blocks[b - 1].end());
  return Permutation(std::move(out));
}

Permutation ChannelBlock(const Permutation& pi, int d, std::uint64_t seed) {
  Rng rng(seed);
  return ChannelBlock(pi, d, rng);
}

}  // namespace permcode
