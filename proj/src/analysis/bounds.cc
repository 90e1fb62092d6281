#include "permcode/analysis/bounds.h"

#include <cmath>
#include <set>

#include <boost/integer/common_factor.hpp>

#include "permcode/analysis/oracles.h"
#include "permcode/core/error.h"

namespace permcode::analysis {
namespace {

BigInt FallingProduct(int n, int from, int to) {
  BigInt p = 1;
  for (int k = from; k <= to; ++k) p *= n - k;
  return p;
}

BigInt Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

bool WithinBallRange(int n, int t) {
  // t <= N - sqrt(N) - 1  <=>  N <= (N - 1 - t)^2 with N - 1 - t >= 0.
  const long long slack = static_cast<long long>(n) - 1 - t;
  return slack >= 0 && n <= slack * slack;
}

}  // namespace

std::string ToString(Metric metric) { return metric == Metric::kBlock ? "block" : "cayley"; }

Metric ParseMetric(const std::string& text) {
  if (text == "block") return Metric::kBlock;
  if (text == "cayley") return Metric::kCayley;
  throw ParameterError("unknown metric '" + text + "' (expected block or cayley)");
}

BigInt WeightCount(int n, int m) {
  if (n < 1 || m < 0 || m > n - 1) throw ParameterError("weight must lie in [0, N - 1]");
  // C(N-1, m) * sum_k (-1)^{m-k} (k+1) m! / (m-k)!
  BigInt sum = 0;
  BigInt falling = 1;  // m! / (m-k)!
  for (int k = 0; k <= m; ++k) {
    if (k > 0) falling *= m - k + 1;
    const BigInt term = falling * (k + 1);
    if ((m - k) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Binomial(n - 1, m) * sum;
}

int MaxBallRadius(int n, Metric metric) {
  int t = 0;
  while (WithinBallRange(n, t + 1) && (metric == Metric::kBlock || 4 * (t + 1) <= n - 1)) ++t;
  return t;
}

int MaxRateRadius(int n) { return MaxBallRadius(n, Metric::kCayley); }

BallReport BallBounds(int n, int t, Metric metric, int enumeration_cap) {
  if (n < 1 || t < 0) throw ParameterError("ball bounds need N >= 1 and t >= 0");
  BallReport report;
  report.n = n;
  report.t = t;
  report.metric = metric;
  report.guaranteed = WithinBallRange(n, t) && (metric == Metric::kBlock || 4 * t <= n - 1);
  report.lower = FallingProduct(n, 1, t);
  report.upper = FallingProduct(n, 0, metric == Metric::kBlock ? t : 4 * t);
  if (n <= enumeration_cap) {
    report.exact = metric == Metric::kBlock ? EnumeratedBlockBall(n, t)
                                            : EnumeratedCayleyBall(n, t);
  }
  return report;
}

LogFactorialBracket LogFactorial(int n) {
  if (n < 1) throw ParameterError("log factorial needs N >= 1");
  LogFactorialBracket b;
  const double log_e = std::log2(std::exp(1.0));
  b.lower = (n + 0.5) * std::log2(static_cast<double>(n)) - log_e * n;
  b.upper = b.lower + 2;
  for (int i = 2; i <= n; ++i) b.exact += std::log2(static_cast<double>(i));
  return b;
}

RateReport RateBounds(int n, int t, Metric metric) {
  if (n < 9) throw ParameterError("rate bounds need N >= 9");
  if (t < 1 || t > MaxRateRadius(n)) {
    throw ParameterError("rate bounds need 1 <= t <= " + std::to_string(MaxRateRadius(n)) +
                         " for N = " + std::to_string(n));
  }
  RateReport r;
  r.n = n;
  r.t = t;
  r.metric = metric;
  r.c = 1 + 2 * std::log2(std::exp(1.0)) / std::log2(static_cast<double>(n));
  const int spread = metric == Metric::kBlock ? 2 * t + 1 : 8 * t + 1;
  r.lower = 1 - r.c * spread / n;
  r.upper = 1 - static_cast<double>(t) / n;
  r.log_factorial = LogFactorial(n);
  return r;
}

LcmCheck LcmBoundCheck(int n, int k, const std::vector<int>& subset) {
  if (k <= 3) throw ParameterError("LCM bound needs k > 3");
  if (static_cast<long long>(n) <= static_cast<long long>(k) * k) {
    throw ParameterError("LCM bound needs N > k^2");
  }
  std::set<int> seen;
  for (int i : subset) {
    if (i < 1 || i > k || !seen.insert(i).second) {
      throw ParameterError("subset must hold distinct values in [1, k]");
    }
  }
  LcmCheck check;
  check.lcm = 1;
  for (int i : subset) check.lcm = boost::integer::lcm(check.lcm, BigInt(n + i));
  check.exponent = 2 * static_cast<int>(subset.size()) - k;
  const BigInt square = check.lcm * check.lcm;
  if (check.exponent >= 0) {
    check.holds = square > boost::multiprecision::pow(BigInt(n), check.exponent);
  } else {
    check.holds = square * boost::multiprecision::pow(BigInt(n), -check.exponent) > 1;
  }
  return check;
}

}  // namespace permcode::analysis
