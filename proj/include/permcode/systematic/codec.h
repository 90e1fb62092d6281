#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permcode/core/permutation.h"
#include "permcode/core/status.h"
#include "permcode/coset/decoder.h"
#include "permcode/systematic/aux_code.h"

namespace permcode::systematic {

struct CrtResult {
  DecodeStatus status = DecodeStatus::kSuccess;
  std::optional<BigIndex> gamma;
  // Blocks (1-based) whose residue disagrees with the recovered index.
  std::vector<int> corrected_blocks;

  bool ok() const { return status == DecodeStatus::kSuccess; }
};

inline constexpr int kCrtCandidateCap = 4096;

// Finds the index gamma < q^{4t-1} whose residues agree with every non-erased block
// except at most t. Every way of setting aside up to t blocks is tried in
// lexicographic order; distinct surviving indices give kAmbiguous.
CrtResult CrtRecoverGamma(const std::vector<std::optional<std::uint64_t>>& residues,
                          const AuxParams& params);

inline constexpr std::uint64_t kExhaustiveSearchLimit = 1'000'000;

// Every index whose aux codeword S satisfies |H(S, received)| <= t, by scanning all
// q^{4t-1} syndromes. Refuses (ParameterError) above `limit`.
std::vector<std::uint64_t> ExhaustiveImageSearch(const std::vector<int>& received,
                                                 const AuxParams& params,
                                                 std::uint64_t limit = kExhaustiveSearchLimit);

// E(pi, phi(syndrome(pi))), a permutation of length N + 2k.
Permutation EncodeSystematic(const Permutation& pi, const AuxParams& params);

struct SystematicDecodeResult {
  DecodeStatus status = DecodeStatus::kSuccess;
  std::optional<Permutation> permutation;
  Permutation truncated = Permutation::Identity(1);
  ExtensionSequence received_sequence;
  int erased_blocks = 0;
  CrtResult crt;
  std::optional<coset::Syndrome> syndrome;
  std::optional<coset::DecodeResult> coset;

  bool ok() const { return status == DecodeStatus::kSuccess; }
};

SystematicDecodeResult DecodeSystematic(const Permutation& received, const AuxParams& params);

}  // namespace permcode::systematic
