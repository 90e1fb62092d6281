#include "permcode/systematic/aux_code.h"

#include <cmath>
#include <string>

#include "permcode/core/error.h"

namespace permcode::systematic {

AuxParams AuxParams::Create(int n, int t, int k, std::optional<std::uint64_t> q,
                            gf::LabelingMode mode) {
  if (t < 1) throw ParameterError("t must be at least 1");
  if (k < 28 * t) throw ParameterError("k must be at least 28t = " + std::to_string(28 * t));
  if (k <= 3) throw ParameterError("k must exceed 3");
  const int k_limit = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)) - 0.5));
  if (k >= k_limit) {
    throw ParameterError("k = " + std::to_string(k) + " must be below floor(sqrt(N) - 1/2) = " +
                         std::to_string(k_limit));
  }
  if (static_cast<long long>(n) <= static_cast<long long>(k) * k) {
    throw ParameterError("N must exceed k^2");
  }
  coset::CodeParams coset = coset::CodeParams::Create(n, t, q, mode);
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  if (coset.q() <= nn * nn - nn || coset.q() >= 2 * (nn * nn - nn)) {
    throw ParameterError("q must lie strictly between N^2 - N and 2(N^2 - N)");
  }
  return AuxParams(coset, k, true);
}

AuxParams AuxParams::Relaxed(int n, int t, int k, std::optional<std::uint64_t> q,
                             gf::LabelingMode mode) {
  if (k < 1 || k > n) throw ParameterError("k must lie in [1, N]");
  return AuxParams(coset::CodeParams::Create(n, t, q, mode), k, false);
}

BigIndex AuxParams::index_bound() const {
  return boost::multiprecision::pow(BigIndex(q()), coset_.syndrome_length());
}

BigIndex GammaIndex(std::span<const gf::FieldElement> x) {
  BigIndex gamma = 0;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    gamma = gamma * it->modulus() + it->value();
  }
  return gamma;
}

std::vector<gf::FieldElement> GammaDigits(const BigIndex& gamma, int digits, std::uint64_t q) {
  if (gamma < 0) throw ParameterError("negative index");
  std::vector<gf::FieldElement> out;
  out.reserve(digits);
  BigIndex rest = gamma;
  for (int i = 0; i < digits; ++i) {
    out.emplace_back(static_cast<std::uint64_t>(rest % q), q);
    rest /= q;
  }
  if (rest != 0) throw ParameterError("index does not fit in the requested number of digits");
  return out;
}

std::vector<std::uint64_t> Residues(const BigIndex& gamma, int n, int k) {
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (int i = 1; i <= k; ++i) out.push_back(static_cast<std::uint64_t>(gamma % (n + i)));
  return out;
}

std::vector<std::uint64_t> Beta(std::span<const gf::FieldElement> x, int n, int k) {
  if (k <= 3) throw ParameterError("beta requires k > 3");
  if (static_cast<long long>(n) <= static_cast<long long>(k) * k) {
    throw ParameterError("beta requires N > k^2");
  }
  return Residues(GammaIndex(x), n, k);
}

std::vector<int> PackResidues(std::span<const std::uint64_t> residues, int n, int k) {
  const int w = n / k;
  std::vector<int> c;
  c.reserve(2 * residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const int anchor = static_cast<int>(i) * w + 1;
    c.push_back(anchor + static_cast<int>(residues[i] / w));
    c.push_back(anchor + static_cast<int>(residues[i] % w));
  }
  return c;
}

ExtensionSequence AuxCodeword(std::span<const gf::FieldElement> x, const AuxParams& params) {
  const auto residues = Residues(GammaIndex(x), params.n(), params.k());
  const std::uint64_t w = params.block_width();
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] >= w * w) {
      throw InternalError("residue " + std::to_string(residues[i]) + " of block " +
                          std::to_string(i + 1) + " does not fit in two base-" +
                          std::to_string(w) + " digits");
    }
  }
  return PackResidues(residues, params.n(), params.k());
}

ExtensionSequence Phi(const coset::Syndrome& alpha, const AuxParams& params) {
  if (alpha.size() != params.coset().syndrome_length()) {
    throw ParameterError("syndrome length differs from 4t - 1");
  }
  return AuxCodeword(alpha.alpha(), params);
}

std::vector<std::optional<std::uint64_t>> UnpackResidues(std::span<const int> received,
                                                         const AuxParams& params) {
  if (static_cast<int>(received.size()) != params.extension_length()) {
    throw ParameterError("received extension sequence has the wrong length");
  }
  const int w = params.block_width();
  std::vector<std::optional<std::uint64_t>> out(params.k());
  for (int i = 1; i <= params.k(); ++i) {
    const int lo = params.anchor(i);
    const int hi = lo + w - 1;
    const int high = received[2 * i - 2];
    const int low = received[2 * i - 1];
    if (high < lo || high > hi || low < lo || low > hi) continue;
    const std::uint64_t beta = static_cast<std::uint64_t>(high - lo) * w + (low - lo);
    if (beta >= static_cast<std::uint64_t>(params.n() + i)) continue;
    out[i - 1] = beta;
  }
  return out;
}

coset::Syndrome SyndromeFromGamma(const BigIndex& gamma, const AuxParams& params) {
  if (gamma >= params.index_bound()) throw ParameterError("index exceeds q^{4t-1}");
  return coset::Syndrome(GammaDigits(gamma, params.coset().syndrome_length(), params.q()));
}

}  // namespace permcode::systematic
