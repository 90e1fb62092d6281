#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace permcode {

// A bijection on [N] in one-line notation (sigma(1), ..., sigma(N)).
// Symbols and positions are 1-based throughout the library.
class Permutation {
 public:
  // Throws ParameterError unless `entries` is a bijection on [entries.size()].
  explicit Permutation(std::vector<int> entries);

  static Permutation Identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }

  // sigma(position), position in [1, N].
  int operator()(int position) const { return entries_[position - 1]; }

  std::span<const int> entries() const { return entries_; }

  // sigma^{-1}(symbol).
  int PositionOf(int symbol) const;

  Permutation Inverse() const;

  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

// (sigma o pi)(i) = sigma(pi(i)).
Permutation Compose(const Permutation& sigma, const Permutation& pi);

// phi(i1, j1, i2, j2): swaps the segments [i1, j1] and [i2, j2] of the identity.
struct GeneralizedTransposition {
  int i1 = 1;
  int j1 = 1;
  int i2 = 2;
  int j2 = 2;

  bool IsValidFor(int n) const {
    return 1 <= i1 && i1 <= j1 && j1 < i2 && i2 <= j2 && j2 <= n;
  }

  friend bool operator==(const GeneralizedTransposition&,
                         const GeneralizedTransposition&) = default;
};

Permutation MakeTransposition(int n, const GeneralizedTransposition& g);

// Every generalized transposition of length n, in lexicographic (i1, j1, i2, j2) order.
std::vector<GeneralizedTransposition> AllTranspositions(int n);

// True iff no two adjacent entries are consecutive increasing integers.
bool IsMinimal(const Permutation& pi);

}  // namespace permcode
