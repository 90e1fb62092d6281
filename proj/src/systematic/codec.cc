#include "permcode/systematic/codec.h"

#include <algorithm>
#include <numeric>

#include "permcode/core/error.h"

namespace permcode::systematic {
namespace {

struct Congruence {
  BigIndex residue;
  BigIndex modulus;
};

// Inverse of a modulo m, gcd(a, m) = 1, m >= 1.
std::int64_t InverseMod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quotient * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quotient * s);
  }
  return ((old_s % m) + m) % m;
}

// Folds x = r_i (mod N + i) into `acc`; false when inconsistent.
bool Merge(Congruence& acc, std::uint64_t residue, std::uint64_t modulus) {
  const std::uint64_t acc_mod = static_cast<std::uint64_t>(acc.modulus % modulus);
  const std::uint64_t g = std::gcd(acc_mod == 0 ? modulus : acc_mod, modulus);
  const std::uint64_t acc_res = static_cast<std::uint64_t>(acc.residue % modulus);
  const std::uint64_t diff = (residue + modulus - acc_res) % modulus;
  if (diff % g != 0) return false;
  const std::uint64_t m = modulus / g;
  if (m == 1) return true;
  const std::uint64_t step = static_cast<std::uint64_t>((acc.modulus / g) % m);
  const std::uint64_t x = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(diff / g % m) * InverseMod(step, m)) % m);
  acc.residue += acc.modulus * x;
  acc.modulus *= m;
  acc.residue %= acc.modulus;
  return true;
}

int Mismatches(const BigIndex& gamma, const std::vector<std::optional<std::uint64_t>>& residues,
               int n, std::vector<int>* blocks) {
  int count = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (!residues[i]) continue;
    if (static_cast<std::uint64_t>(gamma % (n + static_cast<int>(i) + 1)) != *residues[i]) {
      ++count;
      if (blocks) blocks->push_back(static_cast<int>(i) + 1);
    }
  }
  return count;
}

// Calls visit(subset) for every subset of `items` of size `size`, lexicographically.
template <typename Visit>
void ForEachSubset(const std::vector<int>& items, int size, Visit&& visit) {
  const int n = static_cast<int>(items.size());
  if (size > n) return;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> subset(size);
  for (;;) {
    for (int i = 0; i < size; ++i) subset[i] = items[idx[i]];
    visit(subset);
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

CrtResult CrtRecoverGamma(const std::vector<std::optional<std::uint64_t>>& residues,
                          const AuxParams& params) {
  if (static_cast<int>(residues.size()) != params.k()) {
    throw ParameterError("expected one residue per block");
  }
  CrtResult result;
  std::vector<int> present;
  for (int i = 0; i < params.k(); ++i) {
    if (residues[i]) present.push_back(i);
  }
  if (present.empty()) {
    result.status = DecodeStatus::kNoCrtCandidate;
    return result;
  }
  const BigIndex bound = params.index_bound();
  const int t = params.t();
  std::vector<BigIndex> accepted;
  bool overflow = false;

  for (int size = 0; size <= std::min<int>(t, present.size()); ++size) {
    ForEachSubset(present, size, [&](const std::vector<int>& excluded) {
      Congruence acc{0, 1};
      for (int i : present) {
        if (std::binary_search(excluded.begin(), excluded.end(), i)) continue;
        if (!Merge(acc, *residues[i], params.n() + i + 1)) return;
      }
      int enumerated = 0;
      for (BigIndex gamma = acc.residue; gamma < bound; gamma += acc.modulus) {
        if (++enumerated > kCrtCandidateCap) {
          overflow = true;
          return;
        }
        if (std::find(accepted.begin(), accepted.end(), gamma) != accepted.end()) continue;
        if (Mismatches(gamma, residues, params.n(), nullptr) <= t) accepted.push_back(gamma);
      }
    });
  }
  if (accepted.size() > 1 || (overflow && !accepted.empty())) {
    result.status = DecodeStatus::kAmbiguous;
    return result;
  }
  if (accepted.empty()) {
    result.status = overflow ? DecodeStatus::kAmbiguous : DecodeStatus::kNoCrtCandidate;
    return result;
  }
  Mismatches(accepted.front(), residues, params.n(), &result.corrected_blocks);
  result.gamma = accepted.front();
  return result;
}

std::vector<std::uint64_t> ExhaustiveImageSearch(const std::vector<int>& received,
                                                 const AuxParams& params, std::uint64_t limit) {
  if (static_cast<int>(received.size()) != params.extension_length()) {
    throw ParameterError("received extension sequence has the wrong length");
  }
  const BigIndex bound = params.index_bound();
  if (bound > limit) {
    throw ParameterError("image of phi has more than " + std::to_string(limit) + " elements");
  }
  const std::uint64_t size = static_cast<std::uint64_t>(bound);
  const int n = params.n();
  const int k = params.k();
  std::vector<std::uint64_t> matches;
  std::vector<std::uint64_t> residues(k);
  for (std::uint64_t gamma = 0; gamma < size; ++gamma) {
    for (int i = 0; i < k; ++i) residues[i] = gamma % static_cast<std::uint64_t>(n + i + 1);
    const auto candidate = PackResidues(residues, n, k);
    if (static_cast<int>(HammingSet(candidate, received).size()) <= params.t()) {
      matches.push_back(gamma);
    }
  }
  return matches;
}

Permutation EncodeSystematic(const Permutation& pi, const AuxParams& params) {
  const coset::Syndrome alpha = coset::ComputeSyndrome(pi, params.coset());
  return Extend(pi, Phi(alpha, params));
}

SystematicDecodeResult DecodeSystematic(const Permutation& received, const AuxParams& params) {
  if (received.size() != params.n() + params.extension_length()) {
    throw ParameterError("received word must have length N + 2k");
  }
  SystematicDecodeResult result;
  result.truncated = TruncateToMessage(received, params.n());
  result.received_sequence =
      RecoverExtensionSequence(received, params.n(), params.extension_length());
  const auto residues = UnpackResidues(result.received_sequence, params);
  result.erased_blocks = static_cast<int>(std::count(residues.begin(), residues.end(), std::nullopt));

  result.crt = CrtRecoverGamma(residues, params);
  if (!result.crt.ok()) {
    result.status = result.crt.status;
    return result;
  }
  result.syndrome = SyndromeFromGamma(*result.crt.gamma, params);
  result.coset = coset::Decode(result.truncated, *result.syndrome, params.coset());
  result.status = result.coset->status;
  if (result.coset->ok()) result.permutation = result.coset->permutation;
  return result;
}

}  // namespace permcode::systematic
