#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "permcode/coset/labeling.h"
#include "permcode/core/permutation.h"
#include "permcode/gf/field.h"

namespace permcode::coset {

// Parameters of the t-block permutation code: syndromes have 4t - 1 entries.
class CodeParams {
 public:
  // q defaults to the smallest prime suitable for the labeling mode.
  static CodeParams Create(int n, int t, std::optional<std::uint64_t> q = std::nullopt,
                           gf::LabelingMode mode = gf::LabelingMode::kCompact);

  int n() const { return labeling_.n(); }
  int t() const { return t_; }
  std::uint64_t q() const { return labeling_.q(); }
  gf::LabelingMode mode() const { return labeling_.mode(); }
  const PairLabeling& labeling() const { return labeling_; }
  int syndrome_length() const { return 4 * t_ - 1; }

 private:
  CodeParams(PairLabeling labeling, int t) : labeling_(labeling), t_(t) {}

  PairLabeling labeling_;
  int t_;
};

class Syndrome {
 public:
  explicit Syndrome(std::vector<gf::FieldElement> alpha);
  // Plain integers reduced into F_q.
  static Syndrome FromValues(std::span<const std::uint64_t> values, std::uint64_t q);

  const std::vector<gf::FieldElement>& alpha() const { return alpha_; }
  int size() const { return static_cast<int>(alpha_.size()); }
  std::vector<std::uint64_t> values() const;

  friend bool operator==(const Syndrome&, const Syndrome&) = default;

 private:
  std::vector<gf::FieldElement> alpha_;
};

// nu(pi): labels of the adjacent pairs of pi, in position order.
std::vector<gf::FieldElement> Nu(const Permutation& pi, const PairLabeling& labeling);

Syndrome ComputeSyndrome(const Permutation& pi, const CodeParams& params);

// Rebuilds the permutation whose characteristic set is labeled by `labels`, or
// nullopt if the labels do not form a single Hamiltonian path on [N].
std::optional<Permutation> ReconstructPermutation(std::span<const gf::FieldElement> labels,
                                                  const PairLabeling& labeling);

inline constexpr int kDefaultEnumerationCap = 8;

// Cap from PERMCODE_ENUM_CAP when set, else kDefaultEnumerationCap.
int EnumerationCap();

struct Codebook {
  // Syndrome values -> permutations in lexicographic order.
  std::map<std::vector<std::uint64_t>, std::vector<Permutation>> buckets;
  // Largest bucket; ties go to the smallest key.
  std::vector<std::uint64_t> best_key;

  const std::vector<Permutation>& best() const { return buckets.at(best_key); }
  std::size_t total() const;
};

// Partitions S_N by syndrome. Throws ParameterError when N exceeds `cap`.
Codebook EnumerateCodebook(const CodeParams& params, int cap = EnumerationCap());

}  // namespace permcode::coset
