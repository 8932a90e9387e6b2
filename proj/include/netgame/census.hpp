#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netgame/graph.hpp"

namespace netgame {

using Count = std::uint64_t;

/// Per-node and aggregate cycle counts that determine the first five
/// spectral moments of the adjacency matrix.
struct StructuralCensus {
  std::size_t n = 0;
  Count e = 0;
  std::vector<Count> degree;
  std::vector<Count> triangles_per_node;    // t_i: 3-cycles through i
  std::vector<Count> quadrangles_per_node;  // q_i: 4-cycles through i
  std::vector<Count> pentagons_per_node;    // p_i: 5-cycles through i
  Count triangles = 0;                      // Delta = sum t_i / 3
  Count quadrangles = 0;                    // Q = sum q_i / 4
  Count pentagons = 0;                      // Pi = sum p_i / 5
  Count W2 = 0;                             // sum d_i^2
  Count C_dt = 0;                           // sum d_i t_i
};

/// Real-valued aggregates. Used where counts are not integers: printed
/// per-node averages, or finite-difference perturbations of a census.
struct CensusAggregates {
  std::size_t n = 0;
  double e = 0;
  double triangles = 0;
  double quadrangles = 0;
  double pentagons = 0;
  double W2 = 0;
  double C_dt = 0;
};

CensusAggregates aggregates(const StructuralCensus& c);

struct CensusOptions {
  std::size_t threads = 1;  // 0: hardware concurrency
};

std::vector<Count> triangle_counts(const Graph& g, const CensusOptions& options = {});
std::vector<Count> quadrangle_counts(const Graph& g, const CensusOptions& options = {});
std::vector<Count> pentagon_counts(const Graph& g, const CensusOptions& options = {});

/// All counts in one pass over the nodes.
StructuralCensus census(const Graph& g, const CensusOptions& options = {});

}  // namespace netgame
