// netgame: structural census, spectral moments, moment-based eigenvalue
// bounds and equilibria of linear best-response games on edge-list graphs.
//
// Exit codes: 0 success, 2 usage error, 3 data error.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "netgame/census.hpp"
#include "netgame/error.hpp"
#include "netgame/experiment.hpp"
#include "netgame/game.hpp"
#include "netgame/generators.hpp"
#include "netgame/graph.hpp"
#include "netgame/moment_bounds.hpp"
#include "netgame/report.hpp"
#include "netgame/spectral.hpp"

namespace {

using namespace netgame;

constexpr int kUsageError = 2;
constexpr int kDataError = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  bool to_file() const { return static_cast<bool>(file_); }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Graph load(const std::string& path) {
  auto loaded = load_edge_list_file(path);
  if (loaded.self_loops > 0) std::cerr << "warning: dropped " << loaded.self_loops << " self-loop line(s)\n";
  if (loaded.duplicate_edges > 0) std::cerr << "warning: merged " << loaded.duplicate_edges << " duplicate edge(s)\n";
  return std::move(loaded.graph);
}

void emit_json(const std::string& out_path, const nlohmann::json& j) {
  Output out(out_path);
  out.stream() << j.dump(2) << '\n';
}

std::vector<double> parse_x0(const std::string& text, std::size_t n) {
  std::vector<double> x;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      x.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--x0: cannot parse '" + tok + "' as a number");
    }
  }
  if (x.size() == 1) x.assign(n, x[0]);
  if (x.size() != n) {
    throw UsageError("--x0 needs one value or " + std::to_string(n) + " comma-separated values");
  }
  return x;
}

struct Common {
  std::string input;
  std::string out;
  std::size_t threads = 1;
};

void add_input(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "Edge-list file (two node ids per line, '#' comments)")->required();
  cmd->add_option("-o,--out", c.out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural census, spectral moment bounds and network game equilibria"};
  app.require_subcommand(1);
  std::function<void()> action;

  // census
  Common census_opts;
  bool per_node = false;
  auto* census_cmd = app.add_subcommand("census", "Count degrees, triangles, quadrangles and pentagons");
  add_input(census_cmd, census_opts);
  census_cmd->add_flag("--per-node", per_node, "Include per-node count arrays");
  census_cmd->add_option("--threads", census_opts.threads, "Worker threads (0 = all cores)");
  census_cmd->callback([&] {
    action = [&] {
      const Graph g = load(census_opts.input);
      emit_json(census_opts.out, report::census_json(census(g, {census_opts.threads}), per_node));
    };
  });

  // moments
  Common moments_opts;
  bool exact = false;
  auto* moments_cmd = app.add_subcommand("moments", "Spectral moments m1..m5 from the structural census");
  add_input(moments_cmd, moments_opts);
  moments_cmd->add_flag("--exact", exact, "Cross-check against direct closed-walk counts and add exact extremes");
  moments_cmd->add_option("--threads", moments_opts.threads, "Worker threads (0 = all cores)");
  moments_cmd->callback([&] {
    action = [&] {
      const Graph g = load(moments_opts.input);
      const auto m = moments_from_census(census(g, {moments_opts.threads}));
      std::optional<SpectrumExtremes> ext;
      std::optional<std::vector<Count>> oracle;
      if (exact) {
        oracle = closed_walk_counts(g, 5, moments_opts.threads);
        ext = extreme_eigenvalues(g);
      }
      auto j = report::moments_json(m, ext, oracle);
      emit_json(moments_opts.out, j);
      if (oracle && !j["walk_counts_match"].get<bool>()) throw NumericalError("census moments disagree with walk counts");
    };
  });

  // bounds
  Common bounds_opts;
  int order = 2;
  std::string method = "analytic";
  auto* bounds_cmd = app.add_subcommand("bounds", "Moment-based inner bounds on the extreme eigenvalues");
  add_input(bounds_cmd, bounds_opts);
  bounds_cmd->add_option("--order", order, "Order s of the Hankel bounds")->check(CLI::IsMember({1, 2}));
  bounds_cmd->add_option("--method", method, "analytic or bisect")->check(CLI::IsMember({"analytic", "bisect"}));
  bounds_cmd->callback([&] {
    action = [&] {
      const Graph g = load(bounds_opts.input);
      const auto m = moments_from_census(census(g));
      const auto b = method == "analytic" ? bounds_analytic(m, order) : bounds_bisect(m, order);
      emit_json(bounds_opts.out, report::bounds_json(b));
    };
  });

  // sensitivity
  Common sens_opts;
  std::string property = "e";
  double step = 1.0;
  auto* sens_cmd = app.add_subcommand("sensitivity", "Finite-difference sensitivity of the order-2 bounds");
  add_input(sens_cmd, sens_opts);
  sens_cmd->add_option("--property", property, "One of e, triangles, quadrangles, pentagons, W2, C_dt");
  sens_cmd->add_option("--step", step, "Perturbation size h");
  sens_cmd->callback([&] {
    action = [&] {
      const Graph g = load(sens_opts.input);
      StructuralProperty p;
      try {
        p = parse_structural_property(property);
      } catch (const ArgumentError& e) {
        throw UsageError(e.what());
      }
      const auto s = bound_sensitivity(aggregates(census(g)), p, step);
      emit_json(sens_opts.out, {{"property", std::string(to_string(p))}, {"h", step}, {"d_alpha", s.d_alpha}, {"d_beta", s.d_beta}});
    };
  });

  // equilibria
  Common eq_opts;
  double eq_delta = 0.0;
  std::size_t max_n = kDefaultMaxEnumerationNodes;
  auto* eq_cmd = app.add_subcommand("equilibria", "Enumerate all Nash equilibria (exponential in n)");
  add_input(eq_cmd, eq_opts);
  eq_cmd->add_option("--delta", eq_delta, "Interaction strength delta >= 0")->required();
  eq_cmd->add_option("--max-n", max_n, "Refuse graphs with more nodes than this");
  eq_cmd->add_option("--threads", eq_opts.threads, "Worker threads (0 = all cores)");
  eq_cmd->callback([&] {
    action = [&] {
      GameConfig cfg{load(eq_opts.input), eq_delta, std::nullopt};
      const auto result = enumerate_equilibria(cfg, max_n, {}, eq_opts.threads);
      emit_json(eq_opts.out, report::equilibria_json(cfg, result, uniqueness_certificate(cfg)));
    };
  });

  // dynamics
  Common dyn_opts;
  double dyn_delta = 0.0;
  std::string x0_text = "0";
  DynamicsOptions dyn;
  auto* dyn_cmd = app.add_subcommand("dynamics", "Simulate best-response dynamics; writes a CSV trajectory");
  add_input(dyn_cmd, dyn_opts);
  dyn_cmd->add_option("--delta", dyn_delta, "Interaction strength delta >= 0")->required();
  dyn_cmd->add_option("--x0", x0_text, "Initial actions: one value for all nodes or a comma-separated list");
  dyn_cmd->add_option("--dt", dyn.dt, "Euler step in (0, 1]");
  dyn_cmd->add_option("--steps", dyn.max_steps, "Maximum number of steps");
  dyn_cmd->add_option("--tol", dyn.tol, "Stop when max |f(x) - x| < tol");
  dyn_cmd->add_option("--every", dyn.record_every, "Record every k-th step (0 = about 1000 samples)");
  dyn_cmd->callback([&] {
    action = [&] {
      GameConfig cfg{load(dyn_opts.input), dyn_delta, std::nullopt};
      const auto x0 = parse_x0(x0_text, cfg.graph.node_count());
      const auto r = best_response_dynamics(cfg, x0, dyn);
      Output out(dyn_opts.out);
      auto& os = out.stream();
      os << "step,residual";
      for (NodeId i = 0; i < cfg.graph.node_count(); ++i) os << ",x_" << cfg.graph.label(i);
      os << '\n';
      for (const auto& s : r.trajectory) {
        os << s.step << ',' << report::format_double(s.residual);
        for (double v : s.x) os << ',' << report::format_double(v);
        os << '\n';
      }
      std::cerr << (r.converged ? "converged" : "not converged") << " after " << r.steps
                << " steps, residual " << report::format_double(r.residual) << '\n';
    };
  });

  // sample
  Common sample_opts;
  std::string seed_node;
  std::size_t sample_radius = 2;
  auto* sample_cmd = app.add_subcommand("sample", "Extract the ego subgraph around a node as an edge list");
  add_input(sample_cmd, sample_opts);
  sample_cmd->add_option("--seed-node", seed_node, "Node identifier as it appears in the input")->required();
  sample_cmd->add_option("--radius", sample_radius, "BFS radius");
  sample_cmd->callback([&] {
    action = [&] {
      const Graph g = load(sample_opts.input);
      const auto id = g.find_label(seed_node);
      if (!id) throw ArgumentError("seed node '" + seed_node + "' does not occur in the input");
      const Graph sub = ego_subgraph(g, *id, sample_radius);
      Output out(sample_opts.out);
      out.stream() << "# ego subgraph of " << seed_node << ", radius " << sample_radius << ": n=" << sub.node_count()
                   << " e=" << sub.edge_count() << '\n';
      write_edge_list(out.stream(), sub);
    };
  });

  // experiment
  Common exp_opts;
  ExperimentOptions exp;
  bool timings = false;
  auto* exp_cmd = app.add_subcommand("experiment", "Census, moments, bounds and exact extremes on sampled ego subgraphs");
  add_input(exp_cmd, exp_opts);
  exp_cmd->add_option("--num-subgraphs", exp.num_subgraphs, "Number of seed nodes k");
  exp_cmd->add_option("--radius", exp.radius, "BFS radius of each ego subgraph");
  exp_cmd->add_option("--rng-seed", exp.rng_seed, "Seed of the 64-bit generator that picks seed nodes");
  exp_cmd->add_option("--threads", exp.threads, "Parallel pipelines (0 = all cores)");
  exp_cmd->add_flag("--timings", timings, "Append census/bounds wall-time columns (not reproducible)");
  exp_cmd->callback([&] {
    action = [&] {
      const Graph g = load(exp_opts.input);
      const auto r = run_experiment(g, exp);
      Output out(exp_opts.out);
      write_experiment_csv(out.stream(), r.rows, timings);
      std::ostream& summary = out.to_file() ? std::cout : std::cerr;
      summary << "# rows=" << r.rows.size()
              << " spearman(lambda_min,alpha2)=" << report::format_double(r.summary.spearman_lambda_min_alpha2)
              << " spearman(lambda_max,beta2)=" << report::format_double(r.summary.spearman_lambda_max_beta2)
              << " sandwich_violations=" << r.summary.sandwich_violations << '\n';
    };
  });

  // generate
  std::string family = "social-mix", gen_out;
  std::size_t gen_n = 1000, gen_k = 3, gen_m = 2;
  double gen_p = 0.01, gen_beta = 0.1;
  std::uint64_t gen_seed = 1;
  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  gen_cmd->add_option("--family", family, "social-mix, erdos-renyi, watts-strogatz, barabasi-albert, cycle, complete, path, petersen")
      ->check(CLI::IsMember({"social-mix", "erdos-renyi", "watts-strogatz", "barabasi-albert", "cycle", "complete", "path", "petersen"}));
  gen_cmd->add_option("--n", gen_n, "Number of nodes");
  gen_cmd->add_option("--p", gen_p, "Edge probability (erdos-renyi)");
  gen_cmd->add_option("--k", gen_k, "Neighbours per side (watts-strogatz)");
  gen_cmd->add_option("--beta", gen_beta, "Rewiring probability (watts-strogatz)");
  gen_cmd->add_option("--m", gen_m, "Edges per new node (barabasi-albert)");
  gen_cmd->add_option("--seed", gen_seed, "Random seed");
  gen_cmd->add_option("-o,--out", gen_out, "Write output to this file instead of stdout");
  gen_cmd->callback([&] {
    action = [&] {
      Graph g;
      if (family == "social-mix") g = gen::social_mix(gen_n, gen_seed);
      else if (family == "erdos-renyi") g = gen::erdos_renyi(gen_n, gen_p, gen_seed);
      else if (family == "watts-strogatz") g = gen::watts_strogatz(gen_n, gen_k, gen_beta, gen_seed);
      else if (family == "barabasi-albert") g = gen::barabasi_albert(gen_n, gen_m, gen_seed);
      else if (family == "cycle") g = gen::cycle(gen_n);
      else if (family == "complete") g = gen::complete(gen_n);
      else if (family == "path") g = gen::path(gen_n);
      else g = gen::petersen();
      Output out(gen_out);
      write_edge_list(out.stream(), g);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
