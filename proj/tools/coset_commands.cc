#include <memory>
#include <optional>
#include <ostream>

#include <json.hpp>

#include "cli.h"
#include "permcode/core/error.h"
#include "permcode/core/json_io.h"
#include "permcode/coset/decoder.h"
#include "permcode/sim/simulate.h"

namespace permcode::cli {
namespace {

using nlohmann::json;

struct CosetOptions {
  int n = 0;
  int block_errors = 0;
  int cayley_errors = 0;
  std::uint64_t q = 0;
  std::string labeling = "compact";
  bool json = false;
};

struct SimulateOptions {
  std::string channel = "block";
  int errors = -1;
  int trials = 100;
  std::uint64_t seed = 1;
};

void AddCodeOptions(CLI::App* cmd, CosetOptions& o) {
  cmd->add_option("--n", o.n, "Permutation length N")->required();
  auto* t = cmd->add_option("--t,--block-errors", o.block_errors, "Block errors to correct");
  auto* tg = cmd->add_option("--cayley-errors", o.cayley_errors,
                             "Generalized transpositions to correct (uses 4x block budget)");
  t->excludes(tg);
  cmd->add_option("--q", o.q, "Field size (default: smallest suitable prime)");
  cmd->add_option("--labeling", o.labeling, "Pair labeling")
      ->check(CLI::IsMember({"compact", "paper", "paper-compat"}));
  cmd->add_flag("--json", o.json, "Structured JSON output");
}

coset::CodeParams MakeParams(const CosetOptions& o) {
  const int t = o.cayley_errors > 0 ? 4 * o.cayley_errors : o.block_errors;
  if (t < 1) throw ParameterError("give --t (or --block-errors) or --cayley-errors, at least 1");
  return coset::CodeParams::Create(o.n, t, o.q ? std::optional<std::uint64_t>(o.q) : std::nullopt,
                                   gf::ParseLabelingMode(o.labeling));
}

json ParamsJson(const coset::CodeParams& p) {
  return {{"n", p.n()}, {"t", p.t()}, {"q", p.q()}, {"labeling", gf::ToString(p.mode())}};
}

json Values(const std::vector<gf::FieldElement>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.value());
  return out;
}

json TraceJson(const coset::DecodeTrace& t) {
  json out{{"received_labels", Values(t.received_labels)},
           {"r_sent", Values(t.r_sent)},
           {"r_received", Values(t.r_received)},
           {"matrix", t.matrix},
           {"rhs", t.rhs},
           {"solution", t.solution},
           {"inserted", Values(t.inserted)},
           {"removed", Values(t.removed)}};
  if (t.h1) out["h1"] = t.h1->coefficients();
  if (t.h2) out["h2"] = t.h2->coefficients();
  if (t.h) out["h"] = t.h->coefficients();
  return out;
}

int Encode(const CosetOptions& o, Streams& io) {
  const auto params = MakeParams(o);
  const Permutation pi = ParsePermutation(ReadAll(io.in));
  const auto alpha = coset::ComputeSyndrome(pi, params);
  if (o.json) {
    io.out << json{{"params", ParamsJson(params)}, {"syndrome", alpha.values()}}.dump() << '\n';
  } else {
    io.out << json(alpha.values()).dump() << '\n';
  }
  return kOk;
}

int Decode(const CosetOptions& o, const std::vector<std::uint64_t>& alpha, Streams& io) {
  const auto params = MakeParams(o);
  const Permutation received = ParsePermutation(ReadAll(io.in));
  if (static_cast<int>(alpha.size()) != params.syndrome_length()) {
    throw ParameterError("--alpha needs 4t - 1 = " + std::to_string(params.syndrome_length()) +
                         " values");
  }
  const auto r = coset::Decode(received, coset::Syndrome::FromValues(alpha, params.q()), params);
  if (o.json) {
    json out{{"params", ParamsJson(params)}, {"status", ToString(r.status)},
             {"trace", TraceJson(r.trace)}};
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

int Bucket(const CosetOptions& o, bool members, Streams& io) {
  const auto params = MakeParams(o);
  const auto book = coset::EnumerateCodebook(params);
  const auto& best = book.best();
  if (o.json) {
    json out{{"params", ParamsJson(params)},
             {"buckets", book.buckets.size()},
             {"permutations", book.total()},
             {"largest", best.size()},
             {"syndrome", book.best_key}};
    if (members) {
      json list = json::array();
      for (const auto& pi : best) list.push_back(ToJson(pi));
      out["members"] = list;
    }
    io.out << out.dump() << '\n';
    return kOk;
  }
  io.out << "buckets      " << book.buckets.size() << '\n'
         << "permutations " << book.total() << '\n'
         << "largest      " << best.size() << '\n'
         << "syndrome     " << json(book.best_key).dump() << '\n';
  if (members) {
    for (const auto& pi : best) io.out << ToJson(pi).dump() << '\n';
  }
  return kOk;
}

int Simulate(const CosetOptions& o, const SimulateOptions& s, Streams& io) {
  const auto params = MakeParams(o);
  sim::ChannelSpec channel;
  channel.kind = s.channel == "block" ? sim::ChannelSpec::Kind::kBlock
                                      : sim::ChannelSpec::Kind::kCayley;
  if (s.errors >= 0) {
    channel.errors = s.errors;
  } else {
    channel.errors = channel.kind == sim::ChannelSpec::Kind::kBlock ? params.t()
                                                                    : std::max(1, params.t() / 4);
  }
  const auto summary = sim::SimulateCoset(params, channel, s.trials, s.seed);
  json out = sim::ToJson(summary);
  out["params"] = ParamsJson(params);
  out["channel"] = {{"kind", s.channel}, {"errors", channel.errors}};
  if (o.json) {
    io.out << out.dump() << '\n';
  } else {
    io.out << "successes " << summary.successes << '/' << summary.trials << "  seed "
           << summary.seed << '\n';
    for (const auto& [name, count] : summary.failures) io.out << "  " << name << ' ' << count << '\n';
  }
  return kOk;
}

}  // namespace

void AddCosetCommands(CLI::App& app, Action& action) {
  auto* coset = app.add_subcommand("coset", "Non-systematic coset code");
  coset->require_subcommand(1);

  auto enc = std::make_shared<CosetOptions>();
  auto* encode = coset->add_subcommand("encode", "Syndrome of a permutation read from stdin");
  AddCodeOptions(encode, *enc);
  encode->callback([enc, &action] { action = [enc](Streams& io) { return Encode(*enc, io); }; });

  auto dec = std::make_shared<CosetOptions>();
  auto alpha = std::make_shared<std::vector<std::uint64_t>>();
  auto* decode = coset->add_subcommand("decode", "Decode a received permutation read from stdin");
  AddCodeOptions(decode, *dec);
  decode->add_option("--alpha", *alpha, "Syndrome, comma separated")->required()->delimiter(',');
  decode->callback([dec, alpha, &action] {
    action = [dec, alpha](Streams& io) { return Decode(*dec, *alpha, io); };
  });

  auto bkt = std::make_shared<CosetOptions>();
  auto members = std::make_shared<bool>(false);
  auto* bucket = coset->add_subcommand("bucket", "Partition S_N by syndrome (small N)");
  AddCodeOptions(bucket, *bkt);
  bucket->add_flag("--members", *members, "List the largest bucket");
  bucket->callback([bkt, members, &action] {
    action = [bkt, members](Streams& io) { return Bucket(*bkt, *members, io); };
  });

  auto so = std::make_shared<CosetOptions>();
  auto ss = std::make_shared<SimulateOptions>();
  auto* simulate = coset->add_subcommand("simulate", "Seeded encode/channel/decode trials");
  AddCodeOptions(simulate, *so);
  simulate->add_option("--channel", ss->channel)->check(CLI::IsMember({"block", "cayley"}));
  simulate->add_option("--errors", ss->errors, "Channel errors per trial (default: design)");
  simulate->add_option("--trials", ss->trials);
  simulate->add_option("--seed", ss->seed);
  simulate->callback([so, ss, &action] {
    action = [so, ss](Streams& io) { return Simulate(*so, *ss, io); };
  });
}

}  // namespace permcode::cli
