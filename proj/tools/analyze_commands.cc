#include <iomanip>
#include <memory>
#include <ostream>

#include <json.hpp>

#include "cli.h"
#include "permcode/analysis/bounds.h"
#include "permcode/analysis/oracles.h"
#include "permcode/core/error.h"
#include "permcode/core/json_io.h"
#include "permcode/core/rng.h"

namespace permcode::cli {
namespace {

using nlohmann::json;

struct AnalyzeOptions {
  int n = 0;
  int t = 1;
  int k = 0;
  int m = -1;
  int cap = analysis::kBallEnumerationCap;
  std::string metric = "block";
  std::vector<int> subset;
  int samples = 0;
  std::uint64_t seed = 1;
  bool json = false;
};

int Ball(const AnalyzeOptions& o, Streams& io) {
  const auto r = analysis::BallBounds(o.n, o.t, analysis::ParseMetric(o.metric), o.cap);
  if (!r.guaranteed) io.err << "warning: bounds not guaranteed for this (N, t)\n";
  if (o.json) {
    json out{{"n", r.n}, {"t", r.t}, {"metric", o.metric}, {"lower", r.lower.str()},
             {"upper", r.upper.str()}, {"guaranteed", r.guaranteed}, {"consistent", r.consistent()}};
    if (r.exact) out["exact"] = r.exact->str();
    io.out << out.dump() << '\n';
  } else {
    io.out << "N " << r.n << "  t " << r.t << "  " << o.metric << "  lower " << r.lower
           << "  upper " << r.upper;
    if (r.exact) io.out << "  exact " << *r.exact;
    io.out << '\n';
  }
  return kOk;
}

int Rate(const AnalyzeOptions& o, Streams& io) {
  const auto r = analysis::RateBounds(o.n, o.t, analysis::ParseMetric(o.metric));
  if (o.json) {
    io.out << json{{"n", r.n},
                   {"t", r.t},
                   {"metric", o.metric},
                   {"c", r.c},
                   {"lower", r.lower},
                   {"upper", r.upper},
                   {"log_factorial",
                    {{"lower", r.log_factorial.lower},
                     {"exact", r.log_factorial.exact},
                     {"upper", r.log_factorial.upper}}}}
                  .dump()
           << '\n';
  } else {
    io.out << std::setprecision(12) << "N " << r.n << "  t " << r.t << "  " << o.metric
           << "  c " << r.c << "  rate in [" << r.lower << ", " << r.upper << "]\n";
  }
  return kOk;
}

int WeightTable(const AnalyzeOptions& o, Streams& io) {
  if (o.n < 1) throw ParameterError("--n must be positive");
  const int lo = o.m >= 0 ? o.m : 0;
  const int hi = o.m >= 0 ? o.m : o.n - 1;
  json rows = json::array();
  analysis::BigInt total = 0;
  for (int m = lo; m <= hi; ++m) {
    const auto f = analysis::WeightCount(o.n, m);
    total += f;
    rows.push_back({{"m", m}, {"count", f.str()}});
    if (!o.json) io.out << std::setw(4) << m << "  " << f << '\n';
  }
  if (o.json) io.out << json{{"n", o.n}, {"counts", rows}, {"total", total.str()}}.dump() << '\n';
  else if (o.m < 0) io.out << "total " << total << '\n';
  return kOk;
}

int Lcm(const AnalyzeOptions& o, Streams& io) {
  std::vector<std::vector<int>> subsets;
  if (!o.subset.empty()) subsets.push_back(o.subset);
  Rng rng(o.seed);
  for (int i = 0; i < o.samples; ++i) {
    const int size = rng.UniformInt(0, o.k);
    subsets.push_back(SampleSubset(o.k, size, rng));
  }
  if (subsets.empty()) subsets.emplace_back();
  json rows = json::array();
  bool all = true;
  for (const auto& y : subsets) {
    const auto c = analysis::LcmBoundCheck(o.n, o.k, y);
    all = all && c.holds;
    rows.push_back({{"subset", y}, {"lcm", c.lcm.str()}, {"exponent", c.exponent}, {"holds", c.holds}});
    if (!o.json) {
      io.out << json(y).dump() << "  LCM^2 vs N^" << c.exponent << "  " << (c.holds ? "holds" : "FAILS")
             << '\n';
    }
  }
  if (o.json) io.out << json{{"n", o.n}, {"k", o.k}, {"checks", rows}, {"all_hold", all}}.dump() << '\n';
  return kOk;
}

int MinDist(const AnalyzeOptions& o, Streams& io) {
  const auto book = PermutationListFromJson(json::parse(ReadAll(io.in)));
  const int d = analysis::MinDistance(book, analysis::ParseMetric(o.metric));
  if (d == 0) io.err << "violation: codebook contains duplicate permutations\n";
  if (o.json) {
    io.out << json{{"metric", o.metric}, {"codewords", book.size()}, {"min_distance", d}}.dump() << '\n';
  } else {
    io.out << d << '\n';
  }
  return kOk;
}

template <typename Fn>
void Register(CLI::App* analyze, const char* name, const char* help, Action& action, Fn fn,
              void (*options)(CLI::App*, AnalyzeOptions&)) {
  auto o = std::make_shared<AnalyzeOptions>();
  auto* cmd = analyze->add_subcommand(name, help);
  options(cmd, *o);
  cmd->add_flag("--json", o->json, "Structured JSON output");
  cmd->callback([o, fn, &action] { action = [o, fn](Streams& io) { return fn(*o, io); }; });
}

}  // namespace

void AddAnalyzeCommands(CLI::App& app, Action& action) {
  auto* analyze = app.add_subcommand("analyze", "Bounds and brute-force oracles");
  analyze->require_subcommand(1);
  Register(analyze, "ball", "Ball-size bounds (exact size for small N)", action, Ball,
           +[](CLI::App* c, AnalyzeOptions& o) {
             c->add_option("--n", o.n)->required();
             c->add_option("--t", o.t)->required();
             c->add_option("--metric", o.metric)->check(CLI::IsMember({"block", "cayley"}));
             c->add_option("--cap", o.cap, "Largest N to enumerate");
           });
  Register(analyze, "rate", "Optimal-rate bounds", action, Rate,
           +[](CLI::App* c, AnalyzeOptions& o) {
             c->add_option("--n", o.n)->required();
             c->add_option("--t", o.t)->required();
             c->add_option("--metric", o.metric)->check(CLI::IsMember({"block", "cayley"}));
           });
  Register(analyze, "fm", "Permutations counted by block permutation weight", action, WeightTable,
           +[](CLI::App* c, AnalyzeOptions& o) {
             c->add_option("--n", o.n)->required();
             c->add_option("--m", o.m, "Single weight (default: all)");
           });
  Register(analyze, "lcm", "LCM growth check for residue moduli N+1..N+k", action, Lcm,
           +[](CLI::App* c, AnalyzeOptions& o) {
             c->add_option("--n", o.n)->required();
             c->add_option("--k", o.k)->required();
             c->add_option("--subset", o.subset, "Indices in [1, k], comma separated")->delimiter(',');
             c->add_option("--samples", o.samples, "Random subsets to check");
             c->add_option("--seed", o.seed);
           });
  Register(analyze, "mindist", "Minimum distance of a JSON codebook on stdin", action, MinDist,
           +[](CLI::App* c, AnalyzeOptions& o) {
             c->add_option("--metric", o.metric)->check(CLI::IsMember({"block", "cayley"}));
           });
}

}  // namespace permcode::cli
