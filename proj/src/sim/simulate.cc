#include "permcode/sim/simulate.h"

#include <algorithm>
#include <chrono>

#include "permcode/core/channel.h"
#include "permcode/core/error.h"
#include "permcode/coset/decoder.h"
#include "permcode/systematic/codec.h"

namespace permcode::sim {
namespace {

Permutation Transmit(const Permutation& word, const ChannelSpec& channel, Rng& rng) {
  return channel.kind == ChannelSpec::Kind::kBlock ? ChannelBlock(word, channel.errors, rng)
                                                   : ChannelCayley(word, channel.errors, rng);
}

void CheckChannel(const ChannelSpec& channel, int length, int trials) {
  if (trials < 0) throw ParameterError("trial count must be non-negative");
  if (channel.errors < 0) throw ParameterError("error count must be non-negative");
  if (channel.kind == ChannelSpec::Kind::kBlock && channel.errors >= length) {
    throw ParameterError("block channel needs fewer errors than the word length");
  }
}

template <typename Trial>
Summary Run(int trials, std::uint64_t seed, Trial&& trial) {
  Summary s;
  s.seed = seed;
  s.trials = trials;
  const auto start = std::chrono::steady_clock::now();
  const Rng master(seed);
  for (int i = 0; i < trials; ++i) {
    Rng rng = master.Fork(static_cast<std::uint64_t>(i));
    trial(rng, s);
  }
  s.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace

std::string ToString(ChannelSpec::Kind kind) {
  return kind == ChannelSpec::Kind::kBlock ? "block" : "cayley";
}

bool Summary::SameOutcome(const Summary& other) const {
  return seed == other.seed && trials == other.trials && successes == other.successes &&
         failures == other.failures && max_hamming == other.max_hamming;
}

nlohmann::json ToJson(const Summary& summary) {
  return {{"seed", summary.seed},
          {"trials", summary.trials},
          {"successes", summary.successes},
          {"failures", summary.failures},
          {"max_hamming", summary.max_hamming},
          {"wall_seconds", summary.wall_seconds}};
}

Summary SimulateCoset(const coset::CodeParams& params, const ChannelSpec& channel, int trials,
                      std::uint64_t seed) {
  CheckChannel(channel, params.n(), trials);
  return Run(trials, seed, [&](Rng& rng, Summary& s) {
    const Permutation pi = RandomPermutation(params.n(), rng);
    const Permutation received = Transmit(pi, channel, rng);
    const auto r = coset::Decode(received, coset::ComputeSyndrome(pi, params), params);
    if (!r.ok()) {
      ++s.failures[ToString(r.status)];
    } else if (*r.permutation != pi) {
      ++s.failures["miscorrection"];
    } else {
      ++s.successes;
    }
  });
}

Summary SimulateSystematic(const systematic::AuxParams& params, const ChannelSpec& channel,
                           int trials, std::uint64_t seed) {
  CheckChannel(channel, params.n() + params.extension_length(), trials);
  return Run(trials, seed, [&](Rng& rng, Summary& s) {
    const Permutation pi = RandomPermutation(params.n(), rng);
    const ExtensionSequence sent =
        systematic::Phi(coset::ComputeSyndrome(pi, params.coset()), params);
    const Permutation received = Transmit(Extend(pi, sent), channel, rng);
    const auto r = systematic::DecodeSystematic(received, params);
    s.max_hamming = std::max<int>(s.max_hamming, HammingSet(sent, r.received_sequence).size());
    if (!r.ok()) {
      ++s.failures[ToString(r.status)];
    } else if (*r.permutation != pi) {
      ++s.failures["miscorrection"];
    } else {
      ++s.successes;
    }
  });
}

}  // namespace permcode::sim
