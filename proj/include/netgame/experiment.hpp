#pragma once

#include <cstddef>
#include <cstdint>
#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "netgame/census.hpp"
#include "netgame/graph.hpp"
#include "netgame/moment_bounds.hpp"
#include "netgame/spectral.hpp"

namespace netgame {

/// One sampled ego subgraph: its census, moments, bounds of both orders and
/// exact extreme eigenvalues.
struct ExperimentRow {
  std::size_t subgraph_id = 0;
  std::string seed_label;
  std::size_t n = 0;
  Count e = 0, triangles = 0, quadrangles = 0, pentagons = 0, W2 = 0, C_dt = 0;
  std::array<double, 6> m{};
  SupportBounds order1, order2;
  double alpha2_bisect = 0.0, beta2_bisect = 0.0;
  SpectrumExtremes extremes;
  double census_ms = 0.0, bounds_ms = 0.0;
};

struct ExperimentOptions {
  std::size_t num_subgraphs = 100;
  std::size_t radius = 2;
  std::uint64_t rng_seed = 1;
  std::size_t threads = 1;  // 0: hardware concurrency
};

struct ExperimentSummary {
  double spearman_lambda_min_alpha2 = 0.0;
  double spearman_lambda_max_beta2 = 0.0;
  std::size_t sandwich_violations = 0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  ExperimentSummary summary;
};

/// k distinct node ids drawn uniformly without replacement (partial Fisher-Yates).
std::vector<NodeId> sample_seed_nodes(std::size_t n, std::size_t k, std::uint64_t seed);

ExperimentRow analyze_subgraph(const Graph& sub, std::size_t id, std::string seed_label);

/// Sandwich lambda_min <= alpha2 <= alpha1, beta1 <= beta2 <= lambda_max within tol.
bool satisfies_sandwich(const ExperimentRow& row, double tol = 1e-6);

ExperimentResult run_experiment(const Graph& g, const ExperimentOptions& options);

/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> x, std::span<const double> y);

/// Header plus one line per row in subgraph order. Timing columns are
/// appended only when requested, since they differ between runs.
void write_experiment_csv(std::ostream& out, std::span<const ExperimentRow> rows, bool timings);

}  // namespace netgame
