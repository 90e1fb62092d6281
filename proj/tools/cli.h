#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include <CLI11.hpp>

namespace permcode::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDecodeFailure = 2, kParameterViolation = 3 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Set by the selected subcommand's parse callback, run after parsing succeeds.
using Action = std::function<int(Streams&)>;

void AddCosetCommands(CLI::App& app, Action& action);
void AddSystematicCommands(CLI::App& app, Action& action);
void AddAnalyzeCommands(CLI::App& app, Action& action);

std::string ReadAll(std::istream& in);

int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace permcode::cli
