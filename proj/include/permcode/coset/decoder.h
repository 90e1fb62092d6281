#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permcode/coset/code.h"
#include "permcode/core/permutation.h"
#include "permcode/core/status.h"
#include "permcode/gf/polynomial.h"

namespace permcode::coset {

// Intermediate values of one decoding run. Fields after the failing step are left
// empty.
struct DecodeTrace {
  std::vector<gf::FieldElement> received_labels;  // B' in position order
  std::vector<gf::FieldElement> r_sent;           // r(B) from the syndrome
  std::vector<gf::FieldElement> r_received;       // r(B')
  std::vector<std::vector<std::uint64_t>> matrix;
  std::vector<std::uint64_t> rhs;
  std::vector<std::uint64_t> solution;
  std::optional<gf::Polynomial> h1;
  std::optional<gf::Polynomial> h2;
  std::optional<gf::Polynomial> h;
  std::vector<gf::FieldElement> inserted;  // V1, ascending
  std::vector<gf::FieldElement> removed;   // V2, ascending
};

struct DecodeResult {
  DecodeStatus status = DecodeStatus::kSuccess;
  std::optional<Permutation> permutation;
  DecodeTrace trace;

  bool ok() const { return status == DecodeStatus::kSuccess; }
};

// Recovers the codeword with syndrome `alpha` from a received permutation at block
// distance at most t. Every success is checked against the syndrome.
DecodeResult Decode(const Permutation& received, const Syndrome& alpha,
                    const CodeParams& params);

}  // namespace permcode::coset
