#include "permcode/core/status.h"

namespace permcode {

std::string ToString(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::kSuccess: return "success";
    case DecodeStatus::kInconsistentSystem: return "inconsistent-system";
    case DecodeStatus::kRepeatedRoots: return "repeated-roots";
    case DecodeStatus::kNotSplit: return "roots-not-in-field";
    case DecodeStatus::kErrorSetNotInReceived: return "error-set-not-in-received";
    case DecodeStatus::kWrongLabelCount: return "wrong-label-count";
    case DecodeStatus::kInvalidCharacteristicSet: return "invalid-characteristic-set";
    case DecodeStatus::kSyndromeMismatch: return "syndrome-mismatch";
    case DecodeStatus::kNoCrtCandidate: return "no-crt-candidate";
    case DecodeStatus::kAmbiguous: return "ambiguous";
    case DecodeStatus::kMalformedCodeword: return "malformed-codeword";
  }
  return "unknown";
}

}  // namespace permcode
