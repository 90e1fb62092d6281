#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "permcode/coset/code.h"
#include "permcode/systematic/aux_code.h"

namespace permcode::sim {

struct ChannelSpec {
  enum class Kind { kBlock, kCayley };
  Kind kind = Kind::kBlock;
  int errors = 0;  // exact block distance, or number of generalized transpositions
};

std::string ToString(ChannelSpec::Kind kind);

struct Summary {
  std::uint64_t seed = 0;
  int trials = 0;
  int successes = 0;
  // Decoder status name -> count; "miscorrection" for a wrong permutation returned
  // as success.
  std::map<std::string, int> failures;
  // Largest |H(S, S')| seen (systematic runs only).
  int max_hamming = 0;
  double wall_seconds = 0;

  // Everything except the wall time.
  bool SameOutcome(const Summary& other) const;
};

nlohmann::json ToJson(const Summary& summary);

// Trial i draws from Rng(seed).Fork(i): message, then channel.
Summary SimulateCoset(const coset::CodeParams& params, const ChannelSpec& channel, int trials,
                      std::uint64_t seed);
Summary SimulateSystematic(const systematic::AuxParams& params, const ChannelSpec& channel,
                           int trials, std::uint64_t seed);

}  // namespace permcode::sim
