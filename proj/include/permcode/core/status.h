#pragma once

#include <string>

namespace permcode {

enum class DecodeStatus {
  kSuccess,
  kInconsistentSystem,      // no solution to the key-equation system
  kRepeatedRoots,
  kNotSplit,                // an error locator has roots outside F_q
  kErrorSetNotInReceived,   // V2 is not contained in the received labels
  kWrongLabelCount,
  kInvalidCharacteristicSet,
  kSyndromeMismatch,
  kNoCrtCandidate,
  kAmbiguous,
  kMalformedCodeword,
};

std::string ToString(DecodeStatus status);

}  // namespace permcode
