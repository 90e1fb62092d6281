#include "permcode/core/permutation.h"

#include <numeric>
#include <sstream>

#include "permcode/core/error.h"

namespace permcode {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  if (n < 1) throw ParameterError("permutation must have length >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n) {
      throw ParameterError("permutation entry " + std::to_string(v) + " outside [1, " +
                           std::to_string(n) + "]");
    }
    if (seen[v]) throw ParameterError("permutation repeats symbol " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::Identity(int n) {
  if (n < 1) throw ParameterError("identity length must be >= 1");
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

int Permutation::PositionOf(int symbol) const {
  for (int i = 0; i < size(); ++i) {
    if (entries_[i] == symbol) return i + 1;
  }
  throw ParameterError("symbol " + std::to_string(symbol) + " not in permutation");
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(entries_.size());
  for (int i = 0; i < size(); ++i) inv[entries_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::ToString() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < size(); ++i) out << (i ? "," : "") << entries_[i];
  out << ')';
  return out.str();
}

Permutation Compose(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size()) {
    throw ParameterError("compose: length mismatch " + std::to_string(sigma.size()) + " vs " +
                         std::to_string(pi.size()));
  }
  std::vector<int> out(pi.size());
  for (int i = 1; i <= pi.size(); ++i) out[i - 1] = sigma(pi(i));
  return Permutation(std::move(out));
}

Permutation MakeTransposition(int n, const GeneralizedTransposition& g) {
  if (!g.IsValidFor(n)) {
    throw ParameterError("generalized transposition requires 1 <= i1 <= j1 < i2 <= j2 <= N");
  }
  std::vector<int> out;
  out.reserve(n);
  for (int v = 1; v < g.i1; ++v) out.push_back(v);
  for (int v = g.i2; v <= g.j2; ++v) out.push_back(v);
  for (int v = g.j1 + 1; v < g.i2; ++v) out.push_back(v);
  for (int v = g.i1; v <= g.j1; ++v) out.push_back(v);
  for (int v = g.j2 + 1; v <= n; ++v) out.push_back(v);
  return Permutation(std::move(out));
}

std::vector<GeneralizedTransposition> AllTranspositions(int n) {
  std::vector<GeneralizedTransposition> all;
  for (int i1 = 1; i1 <= n; ++i1)
    for (int j1 = i1; j1 <= n; ++j1)
      for (int i2 = j1 + 1; i2 <= n; ++i2)
        for (int j2 = i2; j2 <= n; ++j2) all.push_back({i1, j1, i2, j2});
  return all;
}

bool IsMinimal(const Permutation& pi) {
  for (int i = 1; i < pi.size(); ++i) {
    if (pi(i + 1) == pi(i) + 1) return false;
  }
  return true;
}

}  // namespace permcode
