#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcode::analysis {

using BigInt = boost::multiprecision::cpp_int;

enum class Metric { kBlock, kCayley };

std::string ToString(Metric metric);
Metric ParseMetric(const std::string& text);

// Number of permutations of [N] with block permutation weight m, 0 <= m < N.
BigInt WeightCount(int n, int m);

// Largest t with t <= N - sqrt(N) - 1 (block), additionally 4t <= N - 1 (cayley).
// Zero when no positive radius qualifies.
int MaxBallRadius(int n, Metric metric);

// Largest t admitted by the rate bounds: t <= min(N - sqrt(N) - 1, (N - 1) / 4).
int MaxRateRadius(int n);

struct BallReport {
  int n = 0;
  int t = 0;
  Metric metric = Metric::kBlock;
  BigInt lower;
  BigInt upper;
  std::optional<BigInt> exact;
  // False when t is outside the range where the bounds are proven.
  bool guaranteed = true;

  bool consistent() const { return !exact || (lower <= *exact && *exact <= upper); }
};

inline constexpr int kBallEnumerationCap = 7;

// Product bounds on the ball size; the exact size is enumerated when N <= cap.
BallReport BallBounds(int n, int t, Metric metric, int enumeration_cap = kBallEnumerationCap);

struct LogFactorialBracket {
  double lower = 0;  // (N + 1/2) log N - N log e
  double exact = 0;  // sum_{n <= N} log n
  double upper = 0;  // lower + 2
};

// Base-2 logarithms.
LogFactorialBracket LogFactorial(int n);

struct RateReport {
  int n = 0;
  int t = 0;
  Metric metric = Metric::kBlock;
  double c = 0;  // 1 + 2 log e / log N
  double lower = 0;
  double upper = 0;
  LogFactorialBracket log_factorial;
};

// Throws ParameterError unless N >= 9 and 1 <= t <= MaxRateRadius(N).
RateReport RateBounds(int n, int t, Metric metric);

struct LcmCheck {
  BigInt lcm;
  int exponent = 0;  // 2M - k
  bool holds = false;
};

// LCM{N + i : i in subset}^2 against N^{2M - k}, M = |subset|. Requires k > 3,
// N > k^2 and a subset of distinct values in [1, k].
LcmCheck LcmBoundCheck(int n, int k, const std::vector<int>& subset);

}  // namespace permcode::analysis
