#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "netgame/graph.hpp"

// Deterministic graph families used by tests, benchmarks and the `generate`
// command. Random families take an explicit 64-bit seed.
namespace netgame::gen {

Graph empty(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);
Graph petersen();
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph disjoint_union(const Graph& a, const Graph& b);

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);
/// Ring lattice with k nearest neighbours per side, each edge rewired with probability beta.
Graph watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed);
/// Preferential attachment, `m` edges per arriving node.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// Union on a shared node set of a small-world ring, a preferential-attachment
/// layer and uniform random edges. Produces clustered neighbourhoods with a
/// heavy-tailed degree distribution, similar in spirit to crawled social graphs.
Graph social_mix(std::size_t n, std::uint64_t seed);

/// Uniform integer in [0, bound) by rejection; independent of the standard
/// library's distribution implementations so sampled output is portable.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
double uniform_unit(std::mt19937_64& rng);

}  // namespace netgame::gen
