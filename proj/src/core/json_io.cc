#include "permcode/core/json_io.h"

#include <string>

#include "permcode/core/error.h"

namespace permcode {

nlohmann::json ToJson(const Permutation& pi) {
  return nlohmann::json(std::vector<int>(pi.entries().begin(), pi.entries().end()));
}

Permutation PermutationFromJson(const nlohmann::json& value) {
  if (!value.is_array()) throw InputError("permutation must be a JSON array");
  std::vector<int> entries;
  entries.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_number_integer()) throw InputError("permutation entries must be integers");
    entries.push_back(item.get<int>());
  }
  return Permutation(std::move(entries));
}

Permutation ParsePermutation(std::string_view text) {
  std::string body(text);
  const auto first = body.find_first_not_of(" \t\r\n");
  const auto last = body.find_last_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == '(' && body[last] == ')') {
    body[first] = '[';
    body[last] = ']';
  }
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return PermutationFromJson(value);
}

std::vector<Permutation> PermutationListFromJson(const nlohmann::json& value) {
  if (!value.is_array()) throw InputError("expected a JSON array of permutations");
  std::vector<Permutation> out;
  out.reserve(value.size());
  for (const auto& item : value) out.push_back(PermutationFromJson(item));
  return out;
}

}  // namespace permcode
