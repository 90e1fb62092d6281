#pragma once

#include <cstdint>

#include "permcode/core/permutation.h"
#include "permcode/core/rng.h"

namespace permcode {

// Uniform over all valid (i1, j1, i2, j2) for length n >= 2.
GeneralizedTransposition RandomTransposition(int n, Rng& rng);

// pi composed with t random generalized transpositions; generalized Cayley
// distance to pi is at most t.
Permutation ChannelCayley(const Permutation& pi, int t, Rng& rng);
Permutation ChannelCayley(const Permutation& pi, int t, std::uint64_t seed);

// Cuts pi into d + 1 random nonempty blocks and reorders them by a random minimal
// permutation of [d + 1]. Block distance to pi is exactly d. Requires 0 <= d < N.
Permutation ChannelBlock(const Permutation& pi, int d, Rng& rng);
Permutation ChannelBlock(const Permutation& pi, int d, std::uint64_t seed);

}  // namespace permcode
