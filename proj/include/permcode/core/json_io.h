#pragma once

#include <string_view>
#include <vector>

#include <json.hpp>

#include "permcode/core/permutation.h"

namespace permcode {

nlohmann::json ToJson(const Permutation& pi);

// Accepts a JSON array of 1-based integers; throws ParameterError if the value is
// not an array of integers or not a bijection.
Permutation PermutationFromJson(const nlohmann::json& value);
// JSON array text; the tuple form "(2,1,3)" is also accepted.
Permutation ParsePermutation(std::string_view text);

std::vector<Permutation> PermutationListFromJson(const nlohmann::json& value);

}  // namespace permcode
