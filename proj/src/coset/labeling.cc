#include "permcode/coset/labeling.h"

#include "permcode/core/error.h"

namespace permcode::coset {

PairLabeling::PairLabeling(gf::LabelingMode mode, int n, std::uint64_t q)
    : mode_(mode), n_(n), q_(q) {
  if (n < 2) throw ParameterError("labeling requires N >= 2");
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  if (q < nn * nn - nn) {
    throw ParameterError("q = " + std::to_string(q) + " is below N^2 - N = " +
                         std::to_string(nn * nn - nn));
  }
}

bool PairLabeling::injective() const {
  if (mode_ == gf::LabelingMode::kCompact) return true;
  const std::uint64_t nn = static_cast<std::uint64_t>(n_);
  return q_ >= nn * nn - 1;
}

gf::FieldElement PairLabeling::Label(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw ParameterError("pair entry outside [N]");
  if (i == j) throw ParameterError("pair (i, i) has no label");
  const std::uint64_t ui = i - 1;
  const std::uint64_t uj = j - 1;
  const std::uint64_t nn = static_cast<std::uint64_t>(n_);
  const std::uint64_t raw = mode_ == gf::LabelingMode::kCompact
                                ? ui * (nn - 1) + uj - (j > i ? 1 : 0)
                                : nn * ui + uj;
  return gf::FieldElement(raw, q_);
}

std::optional<OrderedPair> PairLabeling::DecodeRaw(std::uint64_t raw) const {
  const std::uint64_t nn = static_cast<std::uint64_t>(n_);
  if (mode_ == gf::LabelingMode::kCompact) {
    if (raw >= nn * nn - nn) return std::nullopt;
    const int i = static_cast<int>(raw / (nn - 1)) + 1;
    const int r = static_cast<int>(raw % (nn - 1));
    const int j = r + 1 < i ? r + 1 : r + 2;
    return OrderedPair{i, j};
  }
  if (raw >= nn * nn) return std::nullopt;
  const int i = static_cast<int>(raw / nn) + 1;
  const int j = static_cast<int>(raw % nn) + 1;
  if (i == j) return std::nullopt;
  return OrderedPair{i, j};
}

std::optional<OrderedPair> PairLabeling::Unlabel(const gf::FieldElement& label) const {
  if (label.modulus() != q_) throw ParameterError("label from another field");
  const std::uint64_t nn = static_cast<std::uint64_t>(n_);
  for (std::uint64_t raw = label.value(); raw < nn * nn; raw += q_) {
    if (auto p = DecodeRaw(raw)) return p;
  }
  return std::nullopt;
}

}  // namespace permcode::coset
