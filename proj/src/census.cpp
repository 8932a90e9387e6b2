#include "netgame/census.hpp"

#include <algorithm>
#include <memory>

#include "netgame/error.hpp"
#include "netgame/parallel.hpp"

namespace netgame {

namespace {

std::size_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

enum Need : unsigned { kTriangles = 1, kQuadrangles = 2, kPentagons = 4 };

// Scratch space for one worker. All arrays are n-sized and returned to zero
// after each node so a node costs only what its neighbourhood touches.
class NodeKernel {
 public:
  explicit NodeKernel(const Graph& g)
      : g_(g), common_(g.node_count(), 0), near_i_(g.node_count(), 0), near_a_(g.node_count(), 0) {}

  Count triangles(NodeId i) const {
    Count twice = 0;
    for (NodeId a : g_.neighbors(i)) twice += intersection_size(g_.neighbors(i), g_.neighbors(a));
    return twice / 2;
  }

  // Fills common_[j] = |N(i) ∩ N(j)| for every j != i at distance two (or one).
  void load_common_neighbors(NodeId i) {
    for (NodeId a : g_.neighbors(i)) {
      for (NodeId j : g_.neighbors(a)) {
        if (j == i) continue;
        if (common_[j]++ == 0) touched_.push_back(j);
      }
    }
  }

  void clear_common_neighbors() {
    for (NodeId j : touched_) common_[j] = 0;
    touched_.clear();
  }

  // Every 4-cycle through i has a unique opposite corner j; the cycle is a
  // choice of two common neighbours of i and j.
  Count quadrangles() const {
    Count q = 0;
    for (NodeId j : touched_) {
      Count c = common_[j];
      q += c * (c - 1) / 2;
    }
    return q;
  }

  // Enumerates simple paths i-a-b-c and closes each with the common
  // neighbours d of c and i, excluding d = a and d = b. Paths whose end c has
  // no common neighbour with i are skipped. Each 5-cycle is met in both
  // directions.
  Count pentagons(NodeId i) {
    for (NodeId a : g_.neighbors(i)) near_i_[a] = 1;
    Count twice = 0;
    for (NodeId a : g_.neighbors(i)) {
      for (NodeId x : g_.neighbors(a)) near_a_[x] = 1;
      for (NodeId b : g_.neighbors(a)) {
        if (b == i) continue;
        const Count b_near_i = near_i_[b];
        for (NodeId c : g_.neighbors(b)) {
          if (c == a || c == i) continue;
          const Count closers = common_[c];
          if (closers == 0) continue;
          // d = a needs a ~ c; d = b needs b ~ i (b ~ c holds by construction).
          twice += closers - near_a_[c] - b_near_i;
        }
      }
      for (NodeId x : g_.neighbors(a)) near_a_[x] = 0;
    }
    for (NodeId a : g_.neighbors(i)) near_i_[a] = 0;
    return twice / 2;
  }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> common_;
  std::vector<NodeId> touched_;
  std::vector<std::uint8_t> near_i_;
  std::vector<std::uint8_t> near_a_;
};

struct PerNode {
  std::vector<Count> t, q, p;
};

PerNode count_per_node(const Graph& g, unsigned need, std::size_t threads) {
  const std::size_t n = g.node_count();
  PerNode out;
  if (need & kTriangles) out.t.assign(n, 0);
  if (need & kQuadrangles) out.q.assign(n, 0);
  if (need & kPentagons) out.p.assign(n, 0);

  const std::size_t workers = std::min(resolve_threads(threads), std::max<std::size_t>(1, n));
  std::vector<std::unique_ptr<NodeKernel>> kernels(workers);
  parallel_for(
      n, workers,
      [&](std::size_t worker, std::size_t begin, std::size_t end) {
        if (!kernels[worker]) kernels[worker] = std::make_unique<NodeKernel>(g);
        NodeKernel& k = *kernels[worker];
        for (std::size_t v = begin; v < end; ++v) {
          const auto i = static_cast<NodeId>(v);
          if (need & kTriangles) out.t[i] = k.triangles(i);
          if (need & (kQuadrangles | kPentagons)) {
            k.load_common_neighbors(i);
            if (need & kQuadrangles) out.q[i] = k.quadrangles();
            if (need & kPentagons) out.p[i] = k.pentagons(i);
            k.clear_common_neighbors();
          }
        }
      },
      16);
  return out;
}

Count sum(const std::vector<Count>& v) {
  Count s = 0;
  for (Count x : v) s += x;
  return s;
}

}  // namespace

std::vector<Count> triangle_counts(const Graph& g, const CensusOptions& options) {
  return count_per_node(g, kTriangles, options.threads).t;
}

std::vector<Count> quadrangle_counts(const Graph& g, const CensusOptions& options) {
  return count_per_node(g, kQuadrangles, options.threads).q;
}

std::vector<Count> pentagon_counts(const Graph& g, const CensusOptions& options) {
  return count_per_node(g, kPentagons, options.threads).p;
}

StructuralCensus census(const Graph& g, const CensusOptions& options) {
  auto per = count_per_node(g, kTriangles | kQuadrangles | kPentagons, options.threads);
  StructuralCensus c;
  c.n = g.node_count();
  c.e = g.edge_count();
  c.degree.resize(c.n);
  for (NodeId v = 0; v < c.n; ++v) {
    c.degree[v] = g.degree(v);
    c.W2 += c.degree[v] * c.degree[v];
    c.C_dt += c.degree[v] * per.t[v];
  }
  const Count t_sum = sum(per.t), q_sum = sum(per.q), p_sum = sum(per.p);
  if (t_sum % 3 != 0 || q_sum % 4 != 0 || p_sum % 5 != 0) {
    throw NumericalError("census: per-node cycle counts are not divisible by cycle length");
  }
  c.triangles = t_sum / 3;
  c.quadrangles = q_sum / 4;
  c.pentagons = p_sum / 5;
  c.triangles_per_node = std::move(per.t);
  c.quadrangles_per_node = std::move(per.q);
  c.pentagons_per_node = std::move(per.p);
  return c;
}

CensusAggregates aggregates(const StructuralCensus& c) {
  return {c.n,           static_cast<double>(c.e),
          static_cast<double>(c.triangles),   static_cast<double>(c.quadrangles),
          static_cast<double>(c.pentagons),   static_cast<double>(c.W2),
          static_cast<double>(c.C_dt)};
}

}  // namespace netgame
