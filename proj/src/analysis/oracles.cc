#include "permcode/analysis/oracles.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "permcode/core/error.h"
#include "permcode/core/metric.h"

namespace permcode::analysis {
namespace {

constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();

std::uint32_t Factorial(int n) {
  std::uint32_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void CheckOracleSize(int n) {
  if (n < 1 || n > kCayleyOracleCap) {
    throw ParameterError("Cayley distance oracle supports 1 <= N <= " +
                         std::to_string(kCayleyOracleCap));
  }
}

template <typename Visit>
void ForEachPermutation(int n, Visit&& visit) {
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  do {
    visit(Permutation(entries));
  } while (std::next_permutation(entries.begin(), entries.end()));
}

}  // namespace

std::uint32_t RankPermutation(const Permutation& pi) {
  const int n = pi.size();
  std::uint32_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j) smaller += pi(j) < pi(i);
    rank = rank * (n - i + 1) + smaller;
  }
  return rank;
}

Permutation UnrankPermutation(int n, std::uint32_t rank) {
  std::vector<int> digits(n);
  for (int i = n; i >= 1; --i) {
    digits[i - 1] = rank % (n - i + 1);
    rank /= n - i + 1;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> entries;
  entries.reserve(n);
  for (int d : digits) {
    entries.push_back(pool[d]);
    pool.erase(pool.begin() + d);
  }
  return Permutation(std::move(entries));
}

CayleyDistanceTable::CayleyDistanceTable(int n) : n_(n) {
  CheckOracleSize(n);
  distance_.assign(Factorial(n), kUnseen);
  std::vector<Permutation> generators;
  for (const auto& g : AllTranspositions(n)) generators.push_back(MakeTransposition(n, g));

  const Permutation identity = Permutation::Identity(n);
  std::deque<std::uint32_t> frontier{RankPermutation(identity)};
  distance_[frontier.front()] = 0;
  while (!frontier.empty()) {
    const std::uint32_t current = frontier.front();
    frontier.pop_front();
    const Permutation x = UnrankPermutation(n, current);
    const std::uint8_t next = distance_[current] + 1;
    for (const auto& phi : generators) {
      const std::uint32_t r = RankPermutation(Compose(x, phi));
      if (distance_[r] != kUnseen) continue;
      distance_[r] = next;
      diameter_ = std::max<int>(diameter_, next);
      frontier.push_back(r);
    }
  }
}

int CayleyDistanceTable::Weight(const Permutation& pi) const {
  if (pi.size() != n_) throw ParameterError("permutation length differs from the table");
  return distance_[RankPermutation(pi)];
}

int CayleyDistanceTable::Distance(const Permutation& pi1, const Permutation& pi2) const {
  return Weight(Compose(pi1.Inverse(), pi2));
}

std::uint64_t CayleyDistanceTable::BallSize(int t) const {
  return std::count_if(distance_.begin(), distance_.end(), [t](std::uint8_t d) { return d <= t; });
}

int DgExact(const Permutation& pi1, const Permutation& pi2) {
  if (pi1.size() != pi2.size()) throw ParameterError("permutations differ in length");
  return CayleyDistanceTable(pi1.size()).Distance(pi1, pi2);
}

std::vector<std::uint64_t> EnumeratedWeightCounts(int n) {
  CheckOracleSize(n);
  std::vector<std::uint64_t> counts(n, 0);
  ForEachPermutation(n, [&](const Permutation& pi) { ++counts[BlockWeight(pi)]; });
  return counts;
}

BigInt EnumeratedBlockBall(int n, int t) {
  const auto counts = EnumeratedWeightCounts(n);
  BigInt total = 0;
  for (int m = 0; m < n && m <= t; ++m) total += counts[m];
  return total;
}

BigInt EnumeratedCayleyBall(int n, int t) {
  return BigInt(CayleyDistanceTable(n).BallSize(t));
}

int MinDistance(const std::vector<Permutation>& codebook, Metric metric) {
  if (codebook.size() < 2) throw ParameterError("minimum distance needs at least two codewords");
  const int n = codebook.front().size();
  std::optional<CayleyDistanceTable> table;
  if (metric == Metric::kCayley) table.emplace(n);
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    for (std::size_t j = i + 1; j < codebook.size(); ++j) {
      const int d = table ? table->Distance(codebook[i], codebook[j])
                          : BlockDistance(codebook[i], codebook[j]);
      best = std::min(best, d);
    }
  }
  return best;
}

}  // namespace permcode::analysis
