#pragma once

#include <cstdint>
#include <optional>

#include "permcode/core/metric.h"
#include "permcode/gf/field.h"

namespace permcode::coset {

// Injection of ordered pairs (i, j), i != j, of [N] into F_q.
class PairLabeling {
 public:
  // Requires q >= N^2 - N. kPaperCompat accepts smaller-than-injective q
  // (down to N^2 - N) so the classic q = 97, N = 10 setting is usable.
  PairLabeling(gf::LabelingMode mode, int n, std::uint64_t q);

  gf::LabelingMode mode() const { return mode_; }
  int n() const { return n_; }
  std::uint64_t q() const { return q_; }

  // Always true in compact mode; in kPaperCompat mode iff q >= N^2 - 1.
  bool injective() const;

  gf::FieldElement Label(int i, int j) const;
  gf::FieldElement Label(const OrderedPair& p) const { return Label(p.first, p.second); }

  // Inverse of Label. When the kPaperCompat map is not injective, the pair with the
  // smallest raw index v, v + q, v + 2q, ... wins.
  std::optional<OrderedPair> Unlabel(const gf::FieldElement& label) const;

 private:
  std::optional<OrderedPair> DecodeRaw(std::uint64_t raw) const;

  gf::LabelingMode mode_;
  int n_;
  std::uint64_t q_;
};

}  // namespace permcode::coset
