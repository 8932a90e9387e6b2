#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "netgame/census.hpp"
#include "netgame/graph.hpp"

namespace netgame {

/// Spectral moments m_0..m_5 of an adjacency matrix, m_k = (1/n) sum_i lambda_i^k.
struct MomentSequence {
  static constexpr int kMaxOrder = 5;

  std::size_t n = 0;
  std::array<double, kMaxOrder + 1> m{1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  /// Closed-walk counts n * m_k, present when the moments came from exact counts.
  std::optional<std::array<Count, kMaxOrder + 1>> walks;

  double operator[](std::size_t k) const { return m[k]; }
};

/// Moments from cycle counts:
///   n m2 = 2e,  n m3 = 6 Delta,  n m4 = 8Q + 2 W2 - 2e,  n m5 = 10 Pi + 10 C_dt - 30 Delta.
/// Throws ArgumentError for n = 0.
MomentSequence moments_from_census(const StructuralCensus& c);
MomentSequence moments_from_aggregates(const CensusAggregates& c);

/// Integer closed-walk counts implied by a census (index k = 0..5).
std::array<Count, MomentSequence::kMaxOrder + 1> walk_counts_from_census(const StructuralCensus& c);

/// Number of closed walks of each length k = 0..k_max, counted directly by
/// repeated sparse products from every start node. Index 0 holds n.
std::vector<Count> closed_walk_counts(const Graph& g, int k_max, std::size_t threads = 1);

struct SpectrumExtremes {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Smallest and largest adjacency eigenvalues via a dense symmetric solve.
SpectrumExtremes extreme_eigenvalues(const Graph& g);
SpectrumExtremes extreme_eigenvalues(const Eigen::MatrixXd& symmetric);

struct SpectralComparison {
  double neg_inv_lambda_min = 0.0;  // -1 / lambda_n
  double inv_rho = 0.0;             // 1 / lambda_1
  /// True iff no connected component is bipartite; then -1/lambda_n > 1/rho.
  bool strict = false;
  /// Whether the two thresholds differ numerically, reported regardless of `strict`.
  bool numerically_strict = false;
};

/// Compares the two uniqueness thresholds. Throws ArgumentError on edgeless graphs.
SpectralComparison spectral_comparison(const Graph& g);

}  // namespace netgame
