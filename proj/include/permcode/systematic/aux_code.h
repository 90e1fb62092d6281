#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permcode/core/extension.h"
#include "permcode/coset/code.h"
#include "permcode/gf/field.h"

namespace permcode::systematic {

using BigIndex = boost::multiprecision::cpp_int;

// Parameters of the systematic code: K = 2k extension symbols carrying one
// base-w digit pair per residue block.
class AuxParams {
 public:
  // Enforces k >= 28t, 3 < k < floor(sqrt(N) - 1/2), N > k^2 and
  // N^2 - N < q < 2(N^2 - N) with q prime. q defaults to the smallest suitable prime.
  static AuxParams Create(int n, int t, int k, std::optional<std::uint64_t> q = std::nullopt,
                          gf::LabelingMode mode = gf::LabelingMode::kCompact);

  // Only the structural requirements (1 <= k <= N, coset parameters valid). The
  // distance guarantee does not hold; used for small-scale experiments.
  static AuxParams Relaxed(int n, int t, int k, std::optional<std::uint64_t> q = std::nullopt,
                           gf::LabelingMode mode = gf::LabelingMode::kCompact);

  int n() const { return coset_.n(); }
  int t() const { return coset_.t(); }
  int k() const { return k_; }
  int extension_length() const { return 2 * k_; }
  std::uint64_t q() const { return coset_.q(); }
  int block_width() const { return n() / k_; }
  // m_i = (i - 1) w + 1, i in [1, k].
  int anchor(int block) const { return (block - 1) * block_width() + 1; }
  bool strict() const { return strict_; }

  const coset::CodeParams& coset() const { return coset_; }

  // q^{4t-1}, the number of syndromes.
  BigIndex index_bound() const;

 private:
  AuxParams(coset::CodeParams coset, int k, bool strict)
      : coset_(coset), k_(k), strict_(strict) {}

  coset::CodeParams coset_;
  int k_;
  bool strict_;
};

// gamma(x) = sum x_i q^{i-1}.
BigIndex GammaIndex(std::span<const gf::FieldElement> x);

// Inverse of GammaIndex with `digits` base-q digits. Throws when gamma does not fit.
std::vector<gf::FieldElement> GammaDigits(const BigIndex& gamma, int digits, std::uint64_t q);

// (gamma mod (N+1), ..., gamma mod (N+k)).
std::vector<std::uint64_t> Residues(const BigIndex& gamma, int n, int k);

// Residues of gamma(x). Requires N > k^2 and k > 3.
std::vector<std::uint64_t> Beta(std::span<const gf::FieldElement> x, int n, int k);

// Digit-pair layout of residues: c_{2i-1} = m_i + beta_i / w, c_{2i} = m_i + beta_i % w.
// No range checks; large residues spill past their block.
std::vector<int> PackResidues(std::span<const std::uint64_t> residues, int n, int k);

// Aux codeword of a syndrome vector. Throws InternalError if some beta_i >= w^2.
ExtensionSequence AuxCodeword(std::span<const gf::FieldElement> x, const AuxParams& params);

// phi: syndrome -> extension sequence.
ExtensionSequence Phi(const coset::Syndrome& alpha, const AuxParams& params);

// Per-block residues read back from a received extension sequence; nullopt marks an
// erased block (sentinel anchor, digit outside the block, or residue >= N + i).
std::vector<std::optional<std::uint64_t>> UnpackResidues(std::span<const int> received,
                                                         const AuxParams& params);

coset::Syndrome SyndromeFromGamma(const BigIndex& gamma, const AuxParams& params);

}  // namespace permcode::systematic
