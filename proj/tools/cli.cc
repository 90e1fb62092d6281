#include "cli.h"

#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "permcode/core/error.h"

namespace permcode::cli {

std::string ReadAll(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Permutation codes in the block and generalized Cayley metrics", "permcode"};
  app.require_subcommand(1);
  Action action;
  AddCosetCommands(app, action);
  AddSystematicCommands(app, action);
  AddAnalyzeCommands(app, action);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? kOk : kUsage;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParameterViolation;
  }
  if (!action) {
    err << app.help();
    return kUsage;
  }
  Streams streams{in, out, err};
  try {
    return action(streams);
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParameterViolation;
  } catch (const InternalError& e) {
    err << "parameter invariant violated: " << e.what() << '\n';
    return kParameterViolation;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace permcode::cli
