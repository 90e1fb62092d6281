#include "permcode/coset/code.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "permcode/core/error.h"
#include "permcode/gf/polynomial.h"

namespace permcode::coset {

CodeParams CodeParams::Create(int n, int t, std::optional<std::uint64_t> q,
                              gf::LabelingMode mode) {
  if (n < 2) throw ParameterError("N must be at least 2");
  if (t < 1) throw ParameterError("t must be at least 1");
  const std::uint64_t field = q ? *q : gf::SmallestSuitablePrime(n, mode);
  if (field >= (std::uint64_t{1} << 32)) throw ParameterError("q must be below 2^32");
  if (!gf::IsPrime(field)) throw ParameterError("q = " + std::to_string(field) + " is not prime");
  if (field <= static_cast<std::uint64_t>(4 * t - 1)) {
    throw ParameterError("q must exceed 4t - 1 = " + std::to_string(4 * t - 1));
  }
  return CodeParams(PairLabeling(mode, n, field), t);
}

Syndrome::Syndrome(std::vector<gf::FieldElement> alpha) : alpha_(std::move(alpha)) {
  for (const auto& a : alpha_) {
    if (a.modulus() != alpha_.front().modulus()) throw ParameterError("mixed moduli in syndrome");
  }
}

Syndrome Syndrome::FromValues(std::span<const std::uint64_t> values, std::uint64_t q) {
  std::vector<gf::FieldElement> alpha;
  alpha.reserve(values.size());
  for (std::uint64_t v : values) alpha.emplace_back(v, q);
  return Syndrome(std::move(alpha));
}

std::vector<std::uint64_t> Syndrome::values() const {
  std::vector<std::uint64_t> out;
  out.reserve(alpha_.size());
  for (const auto& a : alpha_) out.push_back(a.value());
  return out;
}

std::vector<gf::FieldElement> Nu(const Permutation& pi, const PairLabeling& labeling) {
  if (pi.size() != labeling.n()) throw ParameterError("permutation length differs from N");
  std::vector<gf::FieldElement> labels;
  labels.reserve(pi.size() - 1);
  for (int i = 1; i < pi.size(); ++i) labels.push_back(labeling.Label(pi(i), pi(i + 1)));
  return labels;
}

Syndrome ComputeSyndrome(const Permutation& pi, const CodeParams& params) {
  const auto labels = Nu(pi, params.labeling());
  return Syndrome(gf::PowerSums(labels, params.syndrome_length(), params.q()));
}

std::optional<Permutation> ReconstructPermutation(std::span<const gf::FieldElement> labels,
                                                  const PairLabeling& labeling) {
  const int n = labeling.n();
  if (static_cast<int>(labels.size()) != n - 1) return std::nullopt;
  std::vector<int> next(n + 1, 0);
  std::vector<int> prev(n + 1, 0);
  for (const auto& label : labels) {
    const auto pair = labeling.Unlabel(label);
    if (!pair) return std::nullopt;
    const auto [i, j] = *pair;
    if (next[i] != 0 || prev[j] != 0) return std::nullopt;
    next[i] = j;
    prev[j] = i;
  }
  int start = 0;
  for (int v = 1; v <= n; ++v) {
    if (prev[v] != 0) continue;
    if (start != 0) return std::nullopt;
    start = v;
  }
  if (start == 0) return std::nullopt;
  std::vector<int> order;
  order.reserve(n);
  for (int v = start; v != 0 && static_cast<int>(order.size()) <= n; v = next[v]) {
    order.push_back(v);
  }
  // n - 1 arcs with one source and no branching leave exactly one path; a short
  // walk means the remaining arcs closed a cycle.
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return Permutation(std::move(order));
}

int EnumerationCap() {
  if (const char* env = std::getenv("PERMCODE_ENUM_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ParameterError(std::string("PERMCODE_ENUM_CAP is not an integer: ") + env);
    }
  }
  return kDefaultEnumerationCap;
}

std::size_t Codebook::total() const {
  std::size_t sum = 0;
  for (const auto& [key, members] : buckets) sum += members.size();
  return sum;
}

Codebook EnumerateCodebook(const CodeParams& params, int cap) {
  if (params.n() > cap) {
    throw ParameterError("enumeration of S_" + std::to_string(params.n()) +
                         " refused: N exceeds the cap of " + std::to_string(cap));
  }
  Codebook book;
  std::vector<int> entries(params.n());
  std::iota(entries.begin(), entries.end(), 1);
  do {
    Permutation pi(entries);
    book.buckets[ComputeSyndrome(pi, params).values()].push_back(std::move(pi));
  } while (std::next_permutation(entries.begin(), entries.end()));
  std::size_t best = 0;
  for (const auto& [key, members] : book.buckets) {
    if (members.size() > best) {
      best = members.size();
      book.best_key = key;
    }
  }
  return book;
}

}  // namespace permcode::coset
