#include "permcode/core/rng.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "permcode/core/error.h"

namespace permcode {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : key_(Mix(seed ^ Mix(stream + kGoldenGamma))) {}

Rng::result_type Rng::operator()() {
  ++counter_;
  return Mix(key_ + counter_ * kGoldenGamma);
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("rng: empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = (*this)();
    if (r >= threshold) return r % bound;
  }
}

int Rng::UniformInt(int lo, int hi) {
  if (hi < lo) throw ParameterError("rng: empty range");
  return lo + static_cast<int>(Below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng Rng::Fork(std::uint64_t stream) const {
  Rng child(0);
  child.key_ = Mix(key_ ^ Mix(stream * kGoldenGamma + 1));
  return child;
}

Permutation RandomPermutation(int n, Rng& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(v[i], v[rng.Below(static_cast<std::uint64_t>(i) + 1)]);
  }
  return Permutation(std::move(v));
}

std::vector<int> SampleSubset(int universe, int count, Rng& rng) {
  if (count < 0 || count > universe) throw ParameterError("sample subset: count out of range");
  std::set<int> chosen;
  for (int j = universe - count + 1; j <= universe; ++j) {
    const int candidate = rng.UniformInt(1, j);
    if (!chosen.insert(candidate).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace permcode
