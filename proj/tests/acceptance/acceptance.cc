// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permcode/analysis/bounds.h"
#include "permcode/analysis/oracles.h"
#include "permcode/coset/decoder.h"
#include "permcode/core/channel.h"
#include "permcode/core/extension.h"
#include "permcode/core/metric.h"
#include "permcode/sim/simulate.h"
#include "permcode/systematic/codec.h"

namespace permcode {
namespace {

using analysis::BigInt;
using analysis::Metric;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::ostringstream&)> check;
};

template <typename T>
std::vector<std::uint64_t> Values(const std::vector<T>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

std::vector<Permutation> AllPermutations(int n) {
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(entries);
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

BigInt Factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool GoldenDecode(std::ostringstream& note) {
  const auto params = coset::CodeParams::Create(10, 2, 97, gf::LabelingMode::kPaperCompat);
  const Permutation received({8, 6, 9, 10, 5, 1, 2, 4, 7, 3});
  const auto alpha = coset::Syndrome::FromValues(std::vector<std::uint64_t>{16, 0, 86, 44, 61, 9, 49}, 97);
  const auto r = coset::Decode(received, alpha, params);
  if (!r.ok()) {
    note << "status " << ToString(r.status);
    return false;
  }
  const bool word = *r.permutation == Permutation({2, 4, 7, 3, 5, 1, 8, 6, 9, 10});
  const bool r_b = Values(r.trace.r_sent) == std::vector<std::uint64_t>{16, 31, 0, 42, 54, 94, 59};
  const auto labels = Values(r.trace.received_labels);
  const bool b = std::set<std::uint64_t>(labels.begin(), labels.end()) ==
                 std::set<std::uint64_t>{75, 58, 89, 94, 40, 1, 13, 36, 62};
  const bool v1 = Values(r.trace.inserted) == std::vector<std::uint64_t>{7, 24};
  const bool v2 = Values(r.trace.removed) == std::vector<std::uint64_t>{1, 94};
  note << std::boolalpha << "output " << r.permutation->ToString() << ", r(B) " << r_b << ", B' " << b << ", V1 " << v1
       << ", V2 " << v2;
  return word && r_b && b && v1 && v2;
}

bool SyndromeBuckets(std::ostringstream& note) {
  const auto params = coset::CodeParams::Create(6, 1, 31);
  const auto book = coset::EnumerateCodebook(params);
  std::set<Permutation> seen;
  int min_distance = 6;
  for (const auto& [key, members] : book.buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!seen.insert(members[i]).second) return false;
      if (coset::ComputeSyndrome(members[i], params).values() != key) return false;
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        min_distance = std::min(min_distance, BlockDistance(members[i], members[j]));
      }
    }
  }
  note << book.buckets.size() << " buckets covering " << seen.size() << ", min in-bucket d_B "
       << min_distance;
  return seen.size() == 720 && min_distance >= 3;
}

bool Embedding(std::ostringstream& note) {
  const analysis::CayleyDistanceTable table(5);
  const auto all = AllPermutations(5);
  long pairs = 0;
  long violations = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      const int dg = table.Distance(a, b);
      const int db = BlockDistance(a, b);
      violations += !(dg <= db && db <= 4 * dg);
      ++pairs;
    }
  }
  note << pairs << " pairs, " << violations << " violations";
  return violations == 0;
}

bool BallSandwiches(std::ostringstream& note) {
  bool ok = true;
  int checked = 0;
  for (int n = 5; n <= 7; ++n) {
    const auto counts = analysis::EnumeratedWeightCounts(n);
    BigInt total = 0;
    for (int m = 0; m < n; ++m) {
      total += analysis::WeightCount(n, m);
      ok &= analysis::WeightCount(n, m) == counts[m];
    }
    ok &= total == Factorial(n);
    for (auto metric : {Metric::kBlock, Metric::kCayley}) {
      for (int t = 1; t <= analysis::MaxBallRadius(n, metric); ++t) {
        const auto report = analysis::BallBounds(n, t, metric, 0);
        const BigInt exact = metric == Metric::kBlock ? analysis::EnumeratedBlockBall(n, t)
                                                      : analysis::EnumeratedCayleyBall(n, t);
        ok &= report.guaranteed && report.lower <= exact && exact <= report.upper;
        note << (checked++ ? "; " : "") << ToString(metric) << "(" << n << "," << t << ")=" << exact;
      }
    }
  }
  return ok;
}

bool CosetRoundTrip(std::ostringstream& note) {
  const auto block = sim::SimulateCoset(coset::CodeParams::Create(10, 2),
                                        {sim::ChannelSpec::Kind::kBlock, 2}, 500, 2024);
  const auto cayley = sim::SimulateCoset(coset::CodeParams::Create(12, 4),
                                         {sim::ChannelSpec::Kind::kCayley, 1}, 200, 2025);
  note << "block " << block.successes << "/500, cayley " << cayley.successes << "/200";
  return block.successes == 500 && cayley.successes == 200;
}

bool ResidueSeparation(std::ostringstream& note) {
  const auto digit = [](std::uint64_t v) { return std::vector<gf::FieldElement>{gf::FieldElement(v, 2503)}; };
  const bool b1 = systematic::Beta(digit(280), 50, 7) == std::vector<std::uint64_t>{25, 20, 15, 10, 5, 0, 52};
  const bool b2 = systematic::Beta(digit(1008), 50, 7) == std::vector<std::uint64_t>{39, 20, 1, 36, 18, 0, 39};
  Rng rng(6);
  int pairs = 0;
  int min_distance = 7;
  while (pairs < 1000) {
    const std::uint64_t x1 = rng.Below(2503);
    const std::uint64_t x2 = rng.Below(2503);
    if (x1 == x2) continue;
    const auto a = systematic::Beta(digit(x1), 50, 7);
    const auto b = systematic::Beta(digit(x2), 50, 7);
    int d = 0;
    for (int i = 0; i < 7; ++i) d += a[i] != b[i];
    min_distance = std::min(min_distance, d);
    ++pairs;
  }
  note << "example vectors " << (b1 && b2 ? "match" : "differ") << ", min d_H over " << pairs
       << " pairs " << min_distance;
  return b1 && b2 && min_distance >= 2;
}

bool SystematicRoundTrip(std::ostringstream& note) {
  const auto params = systematic::AuxParams::Create(871, 1, 28);
  Rng master(7);
  int recovered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = master.Fork(trial);
    const Permutation pi = RandomPermutation(871, rng);
    const Permutation received = ChannelBlock(systematic::EncodeSystematic(pi, params), 1, rng);
    const auto r = systematic::DecodeSystematic(received, params);
    recovered += r.ok() && *r.permutation == pi;
  }
  Rng lemma(11);
  int max_h = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Rng rng = lemma.Fork(trial);
    const Permutation pi = RandomPermutation(871, rng);
    const Permutation sigma = systematic::EncodeSystematic(pi, params);
    const auto s = RecoverExtensionSequence(sigma, 871, 56);
    const auto s_prime = RecoverExtensionSequence(ChannelBlock(sigma, 1, rng), 871, 56);
    max_h = std::max(max_h, static_cast<int>(HammingSet(s, s_prime).size()));
  }
  note << recovered << "/100 recovered, max |H(S,S')| " << max_h << " over 500";
  return recovered == 100 && max_h <= 1;
}

bool LcmBound(std::ostringstream& note) {
  Rng rng(14);
  std::vector<int> indices(28);
  std::iota(indices.begin(), indices.end(), 1);
  int holds = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(indices.begin(), indices.end(), rng);
    std::vector<int> subset(indices.begin(), indices.begin() + rng.UniformInt(0, 28));
    std::sort(subset.begin(), subset.end());
    holds += analysis::LcmBoundCheck(871, 28, subset).holds;
  }
  note << holds << "/100 subsets";
  return holds == 100;
}

bool RateConsistency(std::ostringstream& note) {
  int cases = 0;
  int bad = 0;
  for (int n : {9, 20, 50, 100, 500}) {
    for (auto metric : {Metric::kBlock, Metric::kCayley}) {
      for (int t = 1; t <= analysis::MaxRateRadius(n); ++t) {
        const auto r = analysis::RateBounds(n, t, metric);
        bad += r.lower > r.upper;
        ++cases;
      }
    }
  }
  const auto params = coset::CodeParams::Create(6, 1, 31);
  const auto book = coset::EnumerateCodebook(params);
  const BigInt best = book.best().size();
  const BigInt q = params.q();
  const bool pigeonhole = best * q * q * q >= Factorial(6);
  // Radius-1 balls around codewords are disjoint.
  const bool packing = best * analysis::EnumeratedBlockBall(6, 1) <= Factorial(6);
  note << cases << " (N, t, metric) cases, " << bad << " inverted; best bucket " << best
       << " vs 720/31^3, packing " << (packing ? "ok" : "violated");
  return bad == 0 && pigeonhole && packing;
}

}  // namespace
}  // namespace permcode

int main() {
  using namespace permcode;
  const std::vector<Criterion> criteria{
      {1, "golden decode", 1, GoldenDecode},
      {2, "syndrome buckets of S_6 are codes", 10, SyndromeBuckets},
      {3, "metric embedding on S_5", 30, Embedding},
      {4, "ball-size sandwiches", 120, BallSandwiches},
      {5, "coset round trip", 60, CosetRoundTrip},
      {6, "residue separation", 60, ResidueSeparation},
      {7, "systematic round trip", 120, SystematicRoundTrip},
      {8, "LCM bound", 60, LcmBound},
      {9, "rate bound consistency", 60, RateConsistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note << "exception: " << e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      ok = false;
      note << " (over the " << c.budget_seconds << " s budget)";
    }
    failed += !ok;
    std::printf("criterion %d %s  %s  [%.3f s]  %s\n", c.id, ok ? "PASS" : "FAIL", c.name.c_str(),
                seconds, note.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
