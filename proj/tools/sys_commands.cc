#include <memory>
#include <optional>
#include <ostream>

#include <json.hpp>

#include "cli.h"
#include "permcode/core/error.h"
#include "permcode/core/json_io.h"
#include "permcode/sim/simulate.h"
#include "permcode/systematic/codec.h"

namespace permcode::cli {
namespace {

using nlohmann::json;

struct SysOptions {
  int n = 0;
  int t = 0;
  int cayley_errors = 0;
  int k = 0;
  std::uint64_t q = 0;
  std::string labeling = "compact";
  bool relaxed = false;
  bool large = false;
  bool json = false;
};

void AddSysOptions(CLI::App* cmd, SysOptions& o) {
  cmd->add_option("--n", o.n, "Message length N")->required();
  auto* t = cmd->add_option("--t,--block-errors", o.t, "Block errors to correct");
  auto* tg = cmd->add_option("--cayley-errors", o.cayley_errors,
                             "Generalized transpositions to correct (t = 4x, k = 112x; needs --large)");
  t->excludes(tg);
  cmd->add_option("--k", o.k, "Residue blocks (default 28t)");
  cmd->add_option("--q", o.q, "Field size (default: smallest suitable prime)");
  cmd->add_option("--labeling", o.labeling)->check(CLI::IsMember({"compact", "paper", "paper-compat"}));
  cmd->add_flag("--relaxed", o.relaxed, "Skip the distance-guarantee parameter checks");
  cmd->add_flag("--large", o.large, "Allow the generalized Cayley preset");
  cmd->add_flag("--json", o.json, "Structured JSON output");
}

systematic::AuxParams MakeParams(const SysOptions& o, std::ostream& err) {
  int t = o.t;
  int k = o.k;
  if (o.cayley_errors > 0) {
    if (!o.large) {
      throw ParameterError("--cayley-errors needs N > (112 t)^2; pass --large to proceed");
    }
    err << "warning: generalized Cayley preset uses t = " << 4 * o.cayley_errors
        << " block errors and k = " << 112 * o.cayley_errors << " residue blocks\n";
    t = 4 * o.cayley_errors;
    if (k == 0) k = 112 * o.cayley_errors;
  }
  if (t < 1) throw ParameterError("give --t (or --block-errors) or --cayley-errors, at least 1");
  if (k == 0) k = 28 * t;
  const auto q = o.q ? std::optional<std::uint64_t>(o.q) : std::nullopt;
  const auto mode = gf::ParseLabelingMode(o.labeling);
  return o.relaxed ? systematic::AuxParams::Relaxed(o.n, t, k, q, mode)
                   : systematic::AuxParams::Create(o.n, t, k, q, mode);
}

json ParamsJson(const systematic::AuxParams& p) {
  return {{"n", p.n()},   {"t", p.t()},           {"k", p.k()},
          {"q", p.q()},   {"K", p.extension_length()}, {"labeling", gf::ToString(p.coset().mode())},
          {"strict", p.strict()}};
}

int Encode(const SysOptions& o, Streams& io) {
  const auto params = MakeParams(o, io.err);
  const Permutation pi = ParsePermutation(ReadAll(io.in));
  const auto alpha = coset::ComputeSyndrome(pi, params.coset());
  const ExtensionSequence s = systematic::Phi(alpha, params);
  const Permutation sigma = Extend(pi, s);
  if (o.json) {
    io.out << json{{"params", ParamsJson(params)},
                   {"syndrome", alpha.values()},
                   {"extension", s},
                   {"codeword", ToJson(sigma)}}.dump()
           << '\n';
  } else {
    io.out << ToJson(sigma).dump() << '\n';
  }
  return kOk;
}

int Decode(const SysOptions& o, Streams& io) {
  const auto params = MakeParams(o, io.err);
  const Permutation received = ParsePermutation(ReadAll(io.in));
  const auto r = systematic::DecodeSystematic(received, params);
  if (o.json) {
    json out{{"params", ParamsJson(params)},
             {"status", ToString(r.status)},
             {"extension", r.received_sequence},
             {"erased_blocks", r.erased_blocks},
             {"corrected_blocks", r.crt.corrected_blocks}};
    if (r.crt.gamma) out["gamma"] = r.crt.gamma->str();
    if (r.syndrome) out["syndrome"] = r.syndrome->values();
    if (r.ok()) out["permutation"] = ToJson(*r.permutation);
    io.out << out.dump() << '\n';
  } else if (r.ok()) {
    io.out << ToJson(*r.permutation).dump() << '\n';
  }
  if (!r.ok()) {
    io.err << "decode failed: " << ToString(r.status) << '\n';
    return kDecodeFailure;
  }
  return kOk;
}

int Simulate(const SysOptions& o, const std::string& channel_name, int errors, int trials,
             std::uint64_t seed, Streams& io) {
  const auto params = MakeParams(o, io.err);
  sim::ChannelSpec channel;
  channel.kind = channel_name == "block" ? sim::ChannelSpec::Kind::kBlock
                                         : sim::ChannelSpec::Kind::kCayley;
  channel.errors = errors >= 0 ? errors : (o.cayley_errors > 0 ? o.cayley_errors : params.t());
  const auto summary = sim::SimulateSystematic(params, channel, trials, seed);
  json out = sim::ToJson(summary);
  out["params"] = ParamsJson(params);
  out["channel"] = {{"kind", channel_name}, {"errors", channel.errors}};
  if (o.json) {
    io.out << out.dump() << '\n';
  } else {
    io.out << "successes " << summary.successes << '/' << summary.trials << "  seed "
           << summary.seed << "  max |H(S,S')| " << summary.max_hamming << '\n';
    for (const auto& [name, count] : summary.failures) io.out << "  " << name << ' ' << count << '\n';
  }
  return kOk;
}

struct SimulateOptions {
  std::string channel = "block";
  int errors = -1;
  int trials = 100;
  std::uint64_t seed = 1;
};

}  // namespace

void AddSystematicCommands(CLI::App& app, Action& action) {
  auto* sys = app.add_subcommand("sys", "Systematic code built on extension sequences");
  sys->require_subcommand(1);

  auto enc = std::make_shared<SysOptions>();
  auto* encode = sys->add_subcommand("encode", "Codeword of a message read from stdin");
  AddSysOptions(encode, *enc);
  encode->callback([enc, &action] { action = [enc](Streams& io) { return Encode(*enc, io); }; });

  auto dec = std::make_shared<SysOptions>();
  auto* decode = sys->add_subcommand("decode", "Recover the message from a received word on stdin");
  AddSysOptions(decode, *dec);
  decode->callback([dec, &action] { action = [dec](Streams& io) { return Decode(*dec, io); }; });

  auto so = std::make_shared<SysOptions>();
  auto ss = std::make_shared<SimulateOptions>();
  auto* simulate = sys->add_subcommand("simulate", "Seeded encode/channel/decode trials");
  AddSysOptions(simulate, *so);
  simulate->add_option("--channel", ss->channel)->check(CLI::IsMember({"block", "cayley"}));
  simulate->add_option("--errors", ss->errors, "Channel errors per trial (default: design)");
  simulate->add_option("--trials", ss->trials);
  simulate->add_option("--seed", ss->seed);
  simulate->callback([so, ss, &action] {
    action = [so, ss](Streams& io) {
      return Simulate(*so, ss->channel, ss->errors, ss->trials, ss->seed, io);
    };
  });
}

}  // namespace permcode::cli
