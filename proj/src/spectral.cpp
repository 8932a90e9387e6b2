#include "netgame/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netgame/error.hpp"
#include "netgame/parallel.hpp"

namespace netgame {

std::array<Count, MomentSequence::kMaxOrder + 1> walk_counts_from_census(const StructuralCensus& c) {
  std::array<Count, MomentSequence::kMaxOrder + 1> w{};
  w[0] = c.n;
  w[1] = 0;
  w[2] = 2 * c.e;
  w[3] = 6 * c.triangles;
  // 8Q + 2W2 - 2e: W2 >= 2e whenever degrees are consistent with e.
  w[4] = 8 * c.quadrangles + 2 * c.W2 - 2 * c.e;
  // Each triangle contributes to C_dt through its three corners, each with degree >= 2.
  w[5] = 10 * c.pentagons + 10 * c.C_dt - 30 * c.triangles;
  return w;
}

MomentSequence moments_from_census(const StructuralCensus& c) {
  if (c.n == 0) throw ArgumentError("spectral moments are undefined for an empty graph (n = 0)");
  if (c.W2 < 2 * c.e || c.C_dt < 3 * c.triangles) throw ArgumentError("inconsistent census aggregates");
  MomentSequence out;
  out.n = c.n;
  out.walks = walk_counts_from_census(c);
  const double n = static_cast<double>(c.n);
  for (int k = 1; k <= MomentSequence::kMaxOrder; ++k) out.m[k] = static_cast<double>((*out.walks)[k]) / n;
  return out;
}

MomentSequence moments_from_aggregates(const CensusAggregates& c) {
  if (c.n == 0) throw ArgumentError("spectral moments are undefined for an empty graph (n = 0)");
  MomentSequence out;
  out.n = c.n;
  const double n = static_cast<double>(c.n);
  out.m[1] = 0.0;
  out.m[2] = 2.0 * c.e / n;
  out.m[3] = 6.0 * c.triangles / n;
  out.m[4] = (8.0 * c.quadrangles + 2.0 * c.W2 - 2.0 * c.e) / n;
  out.m[5] = (10.0 * c.pentagons + 10.0 * c.C_dt - 30.0 * c.triangles) / n;
  return out;
}

std::vector<Count> closed_walk_counts(const Graph& g, int k_max, std::size_t threads) {
  if (k_max < 0 || k_max > MomentSequence::kMaxOrder) {
    throw ArgumentError("closed_walk_counts supports walk lengths up to 5");
  }
  const std::size_t n = g.node_count();
  std::vector<Count> totals(static_cast<std::size_t>(k_max) + 1, 0);
  totals[0] = n;
  if (k_max == 0 || n == 0) return totals;

  const std::size_t workers = std::min(resolve_threads(threads), n);
  std::vector<std::vector<Count>> partial(workers, std::vector<Count>(totals.size(), 0));
  parallel_for(
      n, workers,
      [&](std::size_t worker, std::size_t begin, std::size_t end) {
        std::vector<Count> cur(n, 0), next(n, 0);
        std::vector<NodeId> cur_support, next_support;
        auto& acc = partial[worker];
        for (std::size_t s = begin; s < end; ++s) {
          const auto start = static_cast<NodeId>(s);
          // cur = A^{k-1} e_s; the closed k-walk count from s is sum over neighbours of s.
          cur[start] = 1;
          cur_support.assign(1, start);
          for (int k = 1; k <= k_max; ++k) {
            Count diag = 0;
            for (NodeId l : g.neighbors(start)) diag += cur[l];
            acc[static_cast<std::size_t>(k)] += diag;
            if (k == k_max) break;
            for (NodeId u : cur_support) {
              for (NodeId v : g.neighbors(u)) {
                if (next[v] == 0) next_support.push_back(v);
                next[v] += cur[u];
              }
            }
            for (NodeId u : cur_support) cur[u] = 0;
            std::swap(cur, next);
            std::swap(cur_support, next_support);
            next_support.clear();
          }
          for (NodeId u : cur_support) cur[u] = 0;
        }
      },
      8);
  for (const auto& p : partial)
    for (std::size_t k = 1; k < totals.size(); ++k) totals[k] += p[k];
  return totals;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u)) a(u, v) = 1.0;
  return a;
}

SpectrumExtremes extreme_eigenvalues(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() == 0) throw ArgumentError("extreme_eigenvalues: empty matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver did not converge");
  const auto& ev = solver.eigenvalues();  // ascending
  return {ev(0), ev(ev.size() - 1)};
}

SpectrumExtremes extreme_eigenvalues(const Graph& g) {
  if (g.node_count() == 0) throw ArgumentError("extreme_eigenvalues: graph has no nodes");
  if (g.edge_count() == 0) return {0.0, 0.0};
  return extreme_eigenvalues(adjacency_matrix(g));
}

SpectralComparison spectral_comparison(const Graph& g) {
  if (g.edge_count() == 0) throw ArgumentError("spectral comparison is undefined for an edgeless graph");
  const auto ext = extreme_eigenvalues(g);
  SpectralComparison out;
  out.neg_inv_lambda_min = -1.0 / ext.lambda_min;
  out.inv_rho = 1.0 / ext.lambda_max;
  const auto comps = connected_components(g);
  const auto bip = component_bipartite(g, comps);
  out.strict = std::none_of(bip.begin(), bip.end(), [](bool b) { return b; });
  out.numerically_strict = out.neg_inv_lambda_min - out.inv_rho > 1e-9 * out.neg_inv_lambda_min;
  return out;
}

}  // namespace netgame
