#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permcode/analysis/bounds.h"
#include "permcode/core/permutation.h"

namespace permcode::analysis {

inline constexpr int kCayleyOracleCap = 7;

// Lehmer rank in [0, N!).
std::uint32_t RankPermutation(const Permutation& pi);
Permutation UnrankPermutation(int n, std::uint32_t rank);

// Generalized Cayley distance from the identity to every permutation of [N],
// by breadth-first search over right multiplication with all generalized
// transpositions. N <= kCayleyOracleCap.
class CayleyDistanceTable {
 public:
  explicit CayleyDistanceTable(int n);

  int n() const { return n_; }
  int Weight(const Permutation& pi) const;
  int Distance(const Permutation& pi1, const Permutation& pi2) const;
  int Diameter() const { return diameter_; }

  // Number of permutations at distance <= t from the identity.
  std::uint64_t BallSize(int t) const;

 private:
  int n_;
  int diameter_ = 0;
  std::vector<std::uint8_t> distance_;
};

// One-off d_G; builds a table for N.
int DgExact(const Permutation& pi1, const Permutation& pi2);

// counts[m] = #{pi in S_N : block weight m}.
std::vector<std::uint64_t> EnumeratedWeightCounts(int n);

BigInt EnumeratedBlockBall(int n, int t);
BigInt EnumeratedCayleyBall(int n, int t);

// Minimum pairwise distance. Throws ParameterError for fewer than two words and
// for the cayley metric above the oracle cap.
int MinDistance(const std::vector<Permutation>& codebook, Metric metric);

}  // namespace permcode::analysis
