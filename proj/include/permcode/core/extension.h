#pragma once

#include <set>
#include <span>
#include <vector>

#include "permcode/core/permutation.h"

namespace permcode {

// Anchor symbols after which N+1, N+2, ... are inserted. Received sequences may
// carry kUnrecoverableAnchor where no legal anchor could be read back.
using ExtensionSequence = std::vector<int>;

inline constexpr int kUnrecoverableAnchor = 0;

// E(pi, S): inserts N+m right after symbol S[m-1], for m = 1..|S| in order.
// Repeated anchors leave the inserted symbols in descending order after the anchor.
Permutation Extend(const Permutation& pi, std::span<const int> anchors);

// T(sigma, U): sigma with the symbols in `removed` deleted, order preserved.
std::vector<int> Truncate(std::span<const int> sigma, std::span<const int> removed);

// Drops every symbol greater than n from an extended permutation.
Permutation TruncateToMessage(const Permutation& sigma, int n);

// Reads back the anchors of an extended permutation of length n + k. For each m,
// symbols above n + m are ignored and the symbol preceding n + m is taken when it
// lies in [n]; otherwise the entry is kUnrecoverableAnchor.
ExtensionSequence RecoverExtensionSequence(const Permutation& sigma_prime, int n, int k);

// H(v1, v2) = { v1[m] : v1[m] != v2[m] }.
std::set<int> HammingSet(std::span<const int> v1, std::span<const int> v2);

// 1-based indices m at which the m-th simultaneous extension step of (pi1, S1)
// and (pi2, S2) is a jump point.
std::vector<int> JumpSet(const Permutation& pi1, const Permutation& pi2,
                         std::span<const int> s1, std::span<const int> s2);

}  // namespace permcode
