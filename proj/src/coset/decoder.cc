#include "permcode/coset/decoder.h"

#include <algorithm>

#include "permcode/core/error.h"
#include "permcode/gf/linear.h"

namespace permcode::coset {
namespace {

using gf::FieldElement;
using gf::Polynomial;

DecodeResult Fail(DecodeResult result, DecodeStatus status) {
  result.status = status;
  result.permutation.reset();
  return result;
}

std::vector<std::uint64_t> Values(const std::vector<FieldElement>& v) {
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

// Negated roots of a polynomial that must split into distinct linear factors.
std::optional<std::vector<FieldElement>> ErrorLabels(const Polynomial& locator,
                                                     DecodeStatus& status) {
  if (locator.degree() <= 0) return std::vector<FieldElement>{};
  const gf::RootSet roots = gf::FindRoots(locator);
  if (roots.repeated) {
    status = DecodeStatus::kRepeatedRoots;
    return std::nullopt;
  }
  if (!roots.splits) {
    status = DecodeStatus::kNotSplit;
    return std::nullopt;
  }
  std::vector<FieldElement> labels;
  for (const auto& r : roots.roots) labels.push_back(-r.value);
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace

DecodeResult Decode(const Permutation& received, const Syndrome& alpha,
                    const CodeParams& params) {
  if (alpha.size() != params.syndrome_length()) {
    throw ParameterError("syndrome length " + std::to_string(alpha.size()) + " differs from 4t - 1 = " +
                         std::to_string(params.syndrome_length()));
  }
  if (!alpha.alpha().empty() && alpha.alpha().front().modulus() != params.q()) {
    throw ParameterError("syndrome is over a different field");
  }
  const int t = params.t();
  const int len = params.syndrome_length();
  const std::uint64_t q = params.q();

  DecodeResult result;
  DecodeTrace& trace = result.trace;
  trace.received_labels = Nu(received, params.labeling());
  const auto received_sums = gf::PowerSums(trace.received_labels, len, q);
  trace.r_received = gf::NewtonToElementary(received_sums, len);
  trace.r_sent = gf::NewtonToElementary(alpha.alpha(), len);

  auto sent = [&](int k) { return k == 0 ? FieldElement(1, q) : k < 0 ? FieldElement(0, q) : trace.r_sent[k - 1]; };
  auto recv = [&](int k) { return k == 0 ? FieldElement(1, q) : k < 0 ? FieldElement(0, q) : trace.r_received[k - 1]; };

  gf::FieldMatrix a(len, 2 * t, q);
  std::vector<FieldElement> b;
  b.reserve(len);
  for (int k = 1; k <= len; ++k) {
    for (int i = 1; i <= t; ++i) {
      a.set(k - 1, i - 1, sent(k - i));
      a.set(k - 1, t + i - 1, recv(k - i));
    }
    b.push_back(recv(k) - sent(k));
  }
  trace.matrix.resize(len);
  for (int r = 0; r < len; ++r) {
    for (int c = 0; c < 2 * t; ++c) trace.matrix[r].push_back(a.at(r, c).value());
  }
  trace.rhs = Values(b);

  const auto solution = gf::LinearSolve(a, b);
  if (!solution) return Fail(std::move(result), DecodeStatus::kInconsistentSystem);
  trace.solution = Values(*solution);

  // h1 = X^t + c_1 X^{t-1} + ... + c_t, h2 = X^t - c_{t+1} X^{t-1} - ... - c_{2t}.
  std::vector<std::uint64_t> h1(t + 1), h2(t + 1);
  h1[t] = h2[t] = 1;
  for (int i = 1; i <= t; ++i) {
    h1[t - i] = (*solution)[i - 1].value();
    h2[t - i] = (-(*solution)[t + i - 1]).value();
  }
  trace.h1 = Polynomial(h1, q);
  trace.h2 = Polynomial(h2, q);
  trace.h = gf::PolyGcd(*trace.h1, *trace.h2);
  const Polynomial v1 = gf::DivMod(*trace.h2, *trace.h).quotient;
  const Polynomial v2 = gf::DivMod(*trace.h1, *trace.h).quotient;

  DecodeStatus status = DecodeStatus::kSuccess;
  const auto inserted = ErrorLabels(v1, status);
  if (!inserted) return Fail(std::move(result), status);
  const auto removed = ErrorLabels(v2, status);
  if (!removed) return Fail(std::move(result), status);
  trace.inserted = *inserted;
  trace.removed = *removed;

  std::vector<FieldElement> estimate = trace.received_labels;
  for (const auto& v : trace.removed) {
    auto it = std::find(estimate.begin(), estimate.end(), v);
    if (it == estimate.end()) return Fail(std::move(result), DecodeStatus::kErrorSetNotInReceived);
    estimate.erase(it);
  }
  estimate.insert(estimate.end(), trace.inserted.begin(), trace.inserted.end());
  if (static_cast<int>(estimate.size()) != params.n() - 1) {
    return Fail(std::move(result), DecodeStatus::kWrongLabelCount);
  }
  auto pi = ReconstructPermutation(estimate, params.labeling());
  if (!pi) return Fail(std::move(result), DecodeStatus::kInvalidCharacteristicSet);
  if (ComputeSyndrome(*pi, params) != alpha) {
    return Fail(std::move(result), DecodeStatus::kSyndromeMismatch);
  }
  result.permutation = std::move(pi);
  return result;
}

}  // namespace permcode::coset
