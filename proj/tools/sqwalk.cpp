#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqw/evolve.hpp"
#include "sqw/io.hpp"
#include "sqw/limit.hpp"
#include "sqw/spectral.hpp"
#include "sqw/stats.hpp"

using json = nlohmann::ordered_json;
using namespace sqw;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitComparison = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string coin = "grover";
  int steps = 100;
  std::vector<double> init = {0.5, 0, 0, 0.5, 0, 0.5, -0.5, 0};
  bool normalize = false;
  int bins = 20;
  int grid = 0;  // 0 = per-command default
  std::string out = "sqwalk_out.csv";
  double tolerance = -1.0;  // -1 = per-command default
  long long seed = 0;       // reserved; the pipeline is deterministic
};

struct CoinChoice {
  bool named = false;
  CoinKind kind = CoinKind::Grover;
  CoinOperator matrix;
  std::string label;
};

CoinChoice resolve_coin(const std::string& spec) {
  CoinChoice c;
  c.label = spec;
  if (spec == "grover") {
    c.named = true;
    c.kind = CoinKind::Grover;
  } else if (spec == "sc") {
    c.named = true;
    c.kind = CoinKind::SelfAvoidCoin;
  } else if (spec == "sp") {
    c.named = true;
    c.kind = CoinKind::SelfAvoidPosition;
  } else if (spec == "scp") {
    c.named = true;
    c.kind = CoinKind::SelfAvoidCoinPosition;
  } else if (spec.rfind("file:", 0) == 0) {
    try {
      c.matrix = load_coin_file(spec.substr(5));
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    return c;
  } else {
    throw ConfigError("unknown coin '" + spec +
                      "' (expected grover|sc|sp|scp|file:PATH)");
  }
  c.matrix = build_coin(c.kind);
  return c;
}

InitialCoinState resolve_init(const RunConfig& cfg) {
  if (cfg.init.size() != 8)
    throw ConfigError("--init needs 8 comma-separated reals");
  InitialCoinState s{cplx{cfg.init[0], cfg.init[1]},
                     cplx{cfg.init[2], cfg.init[3]},
                     cplx{cfg.init[4], cfg.init[5]},
                     cplx{cfg.init[6], cfg.init[7]}};
  double n2 = s.norm_sq();
  if (n2 <= 0.0) throw ConfigError("--init is the zero vector");
  if (!cfg.normalize && std::abs(n2 - 1.0) > 1e-9)
    throw ConfigError("--init is not normalized (pass --normalize)");
  double n = std::sqrt(n2);
  return {s.alpha / n, s.beta / n, s.gamma / n, s.delta / n};
}

std::string json_path(const std::string& out) {
  std::size_t dot = out.find_last_of('.');
  std::size_t slash = out.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return out + ".json";
  return out.substr(0, dot) + ".json";
}

void emit_summary(const RunConfig& cfg, const json& summary) {
  std::string text = summary.dump(2);
  std::ofstream f(json_path(cfg.out));
  if (!f) throw InvariantError("cannot write " + json_path(cfg.out));
  f << text << "\n";
  std::cout << text << "\n";
}

json base_summary(const char* command, const RunConfig& cfg) {
  json j;
  j["command"] = command;
  j["coin"] = cfg.coin;
  j["steps"] = cfg.steps;
  j["init"] = cfg.init;
  return j;
}

json moment_object(const std::vector<std::pair<std::pair<int, int>, double>>&
                       entries) {
  json j;
  for (const auto& [order, v] : entries) {
    std::string key = std::to_string(order.first) + std::to_string(order.second);
    j[key] = v;
  }
  return j;
}

const std::pair<int, int> kMomentOrders[] = {
    {1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}};

// Binned limit reference on [-1,1]^2. For the Grover walk the point mass is
// deposited across the origin-adjacent bins with the quadrant weights of the
// flat-band stationary profile (the actual large-t limit of the binned
// rescaled histogram); with an odd bin count everything lands in the center
// bin anyway.
Histogram closed_form_reference(LimitModel model, const InitialCoinState& s,
                                int bins, int res) {
  Histogram h = binned_density(model, s, bins, res);
  if (model != LimitModel::GroverWatabe) return h;
  double delta = grover_delta(s);
  if (delta <= 0.0) return h;
  int hi = Histogram::bin_of(0.0, bins);
  if (bins % 2 != 0) {
    h.at(hi, hi) += delta;
    return h;
  }
  SpikeSplit split = grover_spike_split(s);
  double scale = delta / split.total;
  int lo = hi - 1;
  h.at(hi, hi) += split.pp * scale;
  h.at(hi, lo) += split.pm * scale;
  h.at(lo, hi) += split.mp * scale;
  h.at(lo, lo) += split.mm * scale;
  return h;
}

std::optional<LimitModel> closed_form_model(const CoinChoice& coin) {
  if (!coin.named) return std::nullopt;
  switch (coin.kind) {
    case CoinKind::Grover: return LimitModel::GroverWatabe;
    case CoinKind::SelfAvoidCoin: return LimitModel::SelfAvoidCoin;
    case CoinKind::SelfAvoidCoinPosition:
      return LimitModel::SelfAvoidCoinPosition;
    default: return std::nullopt;
  }
}

int cmd_walk(const RunConfig& cfg) {
  CoinChoice coin = resolve_coin(cfg.coin);
  InitialCoinState s = resolve_init(cfg);
  if (cfg.steps < 0) throw ConfigError("--steps must be nonnegative");
  double tol = cfg.tolerance < 0 ? 1e-9 : cfg.tolerance;

  WaveFunction psi = evolve(s, coin.matrix, cfg.steps);
  Distribution d = distribution(psi);
  if (std::abs(d.total() - 1.0) > tol) {
    std::ostringstream msg;
    msg << "norm drift: total probability " << d.total();
    throw InvariantError(msg.str());
  }
  write_walk_csv(cfg.out, psi, tol);

  json j = base_summary("walk", cfg);
  j["total_prob"] = d.total();
  j["origin_block_mass"] = block_mass(d, 2);
  std::vector<std::pair<std::pair<int, int>, double>> moments;
  for (auto [r1, r2] : kMomentOrders)
    moments.push_back({{r1, r2}, empirical_moment(d, r1, r2)});
  j["moments"] = moment_object(moments);
  emit_summary(cfg, j);
  return 0;
}

int cmd_limit(const RunConfig& cfg) {
  CoinChoice coin = resolve_coin(cfg.coin);
  InitialCoinState s = resolve_init(cfg);
  auto model = closed_form_model(coin);
  if (!model)
    throw ConfigError("no closed-form limit density for coin '" + cfg.coin +
                      "'; only grover, sc and scp have one");
  if (cfg.bins < 2) throw ConfigError("--bins must be at least 2");
  int res = cfg.grid > 0 ? cfg.grid : 1024;

  Histogram h(cfg.bins);
  for (int ix = 0; ix < cfg.bins; ++ix) {
    double x = -1.0 + 2.0 * (ix + 0.5) / cfg.bins;
    for (int iy = 0; iy < cfg.bins; ++iy) {
      double y = -1.0 + 2.0 * (iy + 0.5) / cfg.bins;
      double v = 0.0;
      switch (*model) {
        case LimitModel::GroverWatabe: v = grover_density(x, y, s); break;
        case LimitModel::SelfAvoidCoin: v = sc_density(x, y, s); break;
        case LimitModel::SelfAvoidCoinPosition: v = scp_density(x, y, s); break;
      }
      h.at(ix, iy) = v;
    }
  }
  write_grid_csv(cfg.out, h);

  json j = base_summary("limit", cfg);
  double mass = quadrature_mass(*model, s, res);
  if (*model == LimitModel::GroverWatabe) {
    j["delta"] = grover_delta(s);
    mass += grover_delta(s);
  }
  j["total_prob"] = mass;
  std::vector<std::pair<std::pair<int, int>, double>> moments;
  for (auto [r1, r2] : kMomentOrders)
    moments.push_back({{r1, r2}, quadrature_moment(*model, s, r1, r2, res)});
  j["moments"] = moment_object(moments);
  emit_summary(cfg, j);
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  CoinChoice coin = resolve_coin(cfg.coin);
  InitialCoinState s = resolve_init(cfg);
  if (cfg.bins < 16) throw ConfigError("--bins must be at least 16");
  int grid = cfg.grid > 0 ? cfg.grid : 256;
  if (grid < 64) throw ConfigError("--grid must be at least 64");

  OracleResult r = oracle_histogram(coin.matrix, s, grid, cfg.bins);
  write_grid_csv(cfg.out, r.hist);

  json j = base_summary("oracle", cfg);
  j["total_prob"] = r.hist.total();
  j["discarded_fraction"] = r.discarded_fraction;
  std::vector<std::pair<std::pair<int, int>, double>> moments;
  for (auto [r1, r2] : kMomentOrders)
    moments.push_back({{r1, r2}, histogram_moment(r.hist, r1, r2)});
  j["moments"] = moment_object(moments);
  emit_summary(cfg, j);
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  CoinChoice coin = resolve_coin(cfg.coin);
  InitialCoinState s = resolve_init(cfg);
  if (cfg.steps < 1) throw ConfigError("--steps must be positive");
  if (cfg.bins < 2) throw ConfigError("--bins must be at least 2");
  double threshold = cfg.tolerance < 0 ? 0.15 : cfg.tolerance;

  WaveFunction psi = evolve(s, coin.matrix, cfg.steps);
  Distribution d = distribution(psi);
  Histogram sim = rescaled_histogram(d, cfg.bins);

  auto model = closed_form_model(coin);
  Histogram ref(cfg.bins);
  json j = base_summary("compare", cfg);
  if (model) {
    int res = cfg.grid > 0 ? cfg.grid : 1024;
    ref = closed_form_reference(*model, s, cfg.bins, res);
    j["reference"] = "closed-form";
    if (*model == LimitModel::GroverWatabe) j["delta"] = grover_delta(s);
  } else {
    if (cfg.bins < 16)
      throw ConfigError("oracle reference needs --bins >= 16");
    int grid = cfg.grid > 0 ? cfg.grid : 256;
    OracleResult r = oracle_histogram(coin.matrix, s, grid, cfg.bins);
    ref = r.hist;
    j["reference"] = "oracle";
    j["discarded_fraction"] = r.discarded_fraction;
  }

  double l1 = l1_distance(sim, ref);
  j["total_prob"] = d.total();
  j["l1_distance"] = l1;
  j["l1_threshold"] = threshold;
  std::vector<std::pair<std::pair<int, int>, double>> deltas;
  for (auto [r1, r2] : kMomentOrders)
    deltas.push_back(
        {{r1, r2}, histogram_moment(sim, r1, r2) - histogram_moment(ref, r1, r2)});
  j["moment_deltas"] = moment_object(deltas);
  write_grid_csv(cfg.out, sim);
  emit_summary(cfg, j);
  return l1 <= threshold ? 0 : kExitComparison;
}

int cmd_moments(const RunConfig& cfg) {
  CoinChoice coin = resolve_coin(cfg.coin);
  InitialCoinState s = resolve_init(cfg);
  if (cfg.steps < 1) throw ConfigError("--steps must be positive");

  std::set<int> times{50, 100, 200, cfg.steps};
  auto model = closed_form_model(coin);

  // limit reference per order: quadrature when a closed form exists,
  // otherwise bin-center moments of the oracle histogram
  std::vector<double> ref;
  json j = base_summary("moments", cfg);
  if (model) {
    int res = cfg.grid > 0 ? cfg.grid : 1024;
    for (int r1 = 0; r1 <= 2; ++r1)
      for (int r2 = 0; r2 <= 2; ++r2)
        ref.push_back(quadrature_moment(*model, s, r1, r2, res));
    j["reference"] = "closed-form";
  } else {
    int grid = cfg.grid > 0 ? cfg.grid : 256;
    int bins = cfg.bins >= 16 ? cfg.bins : 50;
    OracleResult r = oracle_histogram(coin.matrix, s, grid, bins);
    for (int r1 = 0; r1 <= 2; ++r1)
      for (int r2 = 0; r2 <= 2; ++r2)
        ref.push_back(histogram_moment(r.hist, r1, r2));
    j["reference"] = "oracle";
  }

  std::ofstream table(cfg.out);
  if (!table) throw InvariantError("cannot write " + cfg.out);
  table << "t,r1,r2,empirical,limit\n";
  std::vector<std::pair<std::pair<int, int>, double>> last;
  for (int t : times) {
    WaveFunction psi = evolve(s, coin.matrix, t);
    Distribution d = distribution(psi);
    if (t == *times.rbegin()) last.clear();
    int k = 0;
    for (int r1 = 0; r1 <= 2; ++r1)
      for (int r2 = 0; r2 <= 2; ++r2, ++k) {
        double emp = empirical_moment(d, r1, r2);
        table << t << ',' << r1 << ',' << r2 << ','
              << format_double(emp) << ',' << format_double(ref[k]) << '\n';
        if (t == *times.rbegin()) last.push_back({{r1, r2}, emp});
      }
  }
  table.close();

  j["moments"] = moment_object(last);
  emit_summary(cfg, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D four-state quantum walk simulator"};
  app.require_subcommand(1);

  RunConfig cfg;
  int (*run)(const RunConfig&) = nullptr;
  auto add = [&](const char* name, const char* desc,
                 int (*fn)(const RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--coin", cfg.coin, "grover|sc|sp|scp|file:PATH");
    sub->add_option("--steps", cfg.steps, "number of walk steps");
    sub->add_option("--init", cfg.init,
                    "re,im pairs of alpha,beta,gamma,delta")
        ->delimiter(',')
        ->expected(8);
    sub->add_flag("--normalize", cfg.normalize, "rescale init to unit norm");
    sub->add_option("--bins", cfg.bins, "histogram bin count");
    sub->add_option("--grid", cfg.grid,
                    "k-grid size / quadrature resolution (0 = default)");
    sub->add_option("--out", cfg.out, "output CSV path");
    sub->add_option("--tolerance", cfg.tolerance,
                    "norm tolerance (walk) or L1 threshold (compare)");
    sub->add_option("--seed", cfg.seed,
                    "reserved for future randomized tests; unused");
    sub->callback([&run, fn] { run = fn; });
    return sub;
  };
  add("walk", "evolve the walk and write the per-site distribution", cmd_walk);
  add("limit", "evaluate the closed-form limit density on a grid", cmd_limit);
  add("oracle", "reconstruct the limit histogram from momentum space",
      cmd_oracle);
  add("compare", "binned L1 distance between a walk and its limit reference",
      cmd_compare);
  add("moments", "empirical vs limit moment table", cmd_moments);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  }

  try {
    return run(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
