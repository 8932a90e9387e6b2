#include "netgame/generators.hpp"

#include <algorithm>
#include <limits>

#include "netgame/error.hpp"

namespace netgame::gen {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph empty(std::size_t n) { return Graph::from_edges(n, {}); }

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 nodes");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (NodeId i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  const auto shift = static_cast<NodeId>(a.node_count());
  for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.node_count() + b.node_count(), e);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uniform_unit(rng) < p) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

namespace {

void append_watts_strogatz(std::vector<Edge>& e, std::size_t n, std::size_t k, double beta,
                           std::mt19937_64& rng) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t step = 1; step <= k; ++step) {
      std::size_t j = (i + step) % n;
      if (uniform_unit(rng) < beta) j = uniform_below(rng, n);
      if (j != i) e.emplace_back(i, j);
    }
  }
}

void append_barabasi_albert(std::vector<Edge>& e, std::size_t n, std::size_t m, std::mt19937_64& rng) {
  // Endpoint list: sampling a uniform entry samples a node proportionally to degree.
  std::vector<NodeId> endpoints;
  const std::size_t core = std::min(n, m + 1);
  for (std::size_t i = 0; i < core; ++i)
    for (std::size_t j = i + 1; j < core; ++j) {
      e.emplace_back(i, j);
      endpoints.push_back(static_cast<NodeId>(i));
      endpoints.push_back(static_cast<NodeId>(j));
    }
  for (std::size_t v = core; v < n; ++v) {
    std::vector<NodeId> picked;
    while (picked.size() < m) {
      NodeId t = endpoints[uniform_below(rng, endpoints.size())];
      if (std::find(picked.begin(), picked.end(), t) == picked.end()) picked.push_back(t);
    }
    for (NodeId t : picked) {
      e.emplace_back(v, t);
      endpoints.push_back(static_cast<NodeId>(v));
      endpoints.push_back(t);
    }
  }
}

}  // namespace

Graph watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  append_watts_strogatz(e, n, k, beta, rng);
  return Graph::from_edges(n, e);
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m == 0) return empty(n);
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  append_barabasi_albert(e, n, m, rng);
  return Graph::from_edges(n, e);
}

Graph social_mix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  append_watts_strogatz(e, n, 3, 0.05, rng);
  append_barabasi_albert(e, n, 2, rng);
  for (std::size_t i = 0; i < n / 2; ++i) e.emplace_back(uniform_below(rng, n), uniform_below(rng, n));
  return Graph::from_edges(n, e);
}

}  // namespace netgame::gen
