#include "netgame/game.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include <Eigen/Dense>

#include "netgame/census.hpp"
#include "netgame/error.hpp"
#include "netgame/moment_bounds.hpp"
#include "netgame/parallel.hpp"
#include "netgame/spectral.hpp"

namespace netgame {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_config(const GameConfig& cfg) {
  if (!(cfg.delta >= 0) || !std::isfinite(cfg.delta)) throw ArgumentError("delta must be finite and >= 0");
}

void check_size(const std::vector<double>& x, const GameConfig& cfg) {
  if (x.size() != cfg.graph.node_count()) throw ArgumentError("action profile size does not match node count");
}

std::vector<NodeId> active_indices(const std::vector<double>& x, double activity_tol) {
  std::vector<NodeId> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > activity_tol) s.push_back(static_cast<NodeId>(i));
  return s;
}

}  // namespace

ActionProfile make_profile(std::vector<double> x, double activity_tol) {
  ActionProfile p;
  p.active_set = active_indices(x, activity_tol);
  p.x = std::move(x);
  return p;
}

double neighbor_sum(const Graph& g, NodeId i, const std::vector<double>& x) {
  double s = 0.0;
  for (NodeId j : g.neighbors(i)) s += x[j];
  return s;
}

double payoff(NodeId i, const std::vector<double>& x, const GameConfig& cfg) {
  if (!cfg.cournot) throw ArgumentError("payoff requires Cournot parameters (a, b, d)");
  check_size(x, cfg);
  const auto& p = *cfg.cournot;
  if (!(p.b > 0) || !(p.a > p.d)) throw ArgumentError("Cournot parameters need b > 0 and a > d");
  const double scale = p.isolated_quantity();
  const double qi = scale * x[i];
  const double others = scale * neighbor_sum(cfg.graph, i, x);
  return qi * (p.a - p.b * (qi + 2 * cfg.delta * others)) - p.d * qi;
}

double best_response(NodeId i, const std::vector<double>& x, const GameConfig& cfg) {
  return std::max(0.0, 1.0 - cfg.delta * neighbor_sum(cfg.graph, i, x));
}

std::vector<double> best_response(const std::vector<double>& x, const GameConfig& cfg) {
  check_size(x, cfg);
  std::vector<double> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) f[i] = best_response(static_cast<NodeId>(i), x, cfg);
  return f;
}

double fixed_point_residual(const std::vector<double>& x, const GameConfig& cfg) {
  check_size(x, cfg);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    r = std::max(r, std::fabs(best_response(static_cast<NodeId>(i), x, cfg) - x[i]));
  return r;
}

double potential(const std::vector<double>& x, const GameConfig& cfg) {
  check_size(x, cfg);
  double own = 0.0, cross = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    own += x[i] - 0.5 * x[i] * x[i];
    cross += x[i] * neighbor_sum(cfg.graph, static_cast<NodeId>(i), x);
  }
  return own - 0.5 * cfg.delta * cross;
}

std::vector<double> potential_gradient(const std::vector<double>& x, const GameConfig& cfg) {
  check_size(x, cfg);
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    g[i] = 1.0 - x[i] - cfg.delta * neighbor_sum(cfg.graph, static_cast<NodeId>(i), x);
  return g;
}

std::vector<double> kkt_residual(const std::vector<double>& x, const GameConfig& cfg, double activity_tol) {
  auto g = potential_gradient(x, cfg);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] > activity_tol)) g[i] = std::max(0.0, g[i]);
  return g;
}

StabilityReport classify_stability(const std::vector<double>& x, const GameConfig& cfg, const GameTolerances& tol) {
  check_config(cfg);
  check_size(x, cfg);
  if (fixed_point_residual(x, cfg) > tol.fixed_point) {
    throw ArgumentError("stability is only defined at an equilibrium (fixed-point residual too large)");
  }
  StabilityReport r;
  r.stable = true;
  const auto active = active_indices(x, tol.activity);

  // delta < -1 / lambda_min(A_S); vacuous when A_S has no edges (lambda_min = 0).
  if (active.size() >= 2) {
    const Graph sub = cfg.graph.induced_subgraph(active);
    if (sub.edge_count() > 0) {
      r.lambda_min_active = extreme_eigenvalues(sub).lambda_min;
      const double threshold = -1.0 / r.lambda_min_active;
      if (!(cfg.delta < threshold - tol.stability)) {
        r.stable = false;
        if (std::fabs(cfg.delta - threshold) <= tol.stability) r.boundary = true;
      }
    }
  }
  std::vector<bool> is_active(x.size(), false);
  for (NodeId i : active) is_active[i] = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_active[i]) continue;
    const double pressure = cfg.delta * neighbor_sum(cfg.graph, static_cast<NodeId>(i), x);
    if (!(pressure > 1.0 + tol.stability)) {
      r.stable = false;
      if (pressure >= 1.0 - tol.inequality) r.boundary = true;
    }
  }
  return r;
}

bool stability_check(const std::vector<double>& x, const GameConfig& cfg, const GameTolerances& tol) {
  return classify_stability(x, cfg, tol).stable;
}

namespace {

using Mask = std::uint64_t;

std::vector<NodeId> members(Mask mask) {
  std::vector<NodeId> s;
  while (mask) {
    s.push_back(static_cast<NodeId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

// Size first, then lexicographic on the sorted member lists.
bool subset_order(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  while (a && b) {
    const int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

enum class Outcome { Rejected, Accepted, Singular, Ambiguous };

struct Candidate {
  Mask mask = 0;
  Outcome outcome = Outcome::Rejected;
  std::vector<double> x;
};

class SubsetSolver {
 public:
  SubsetSolver(const GameConfig& cfg, const Eigen::MatrixXd& adjacency, const GameTolerances& tol)
      : cfg_(cfg), adjacency_(adjacency), tol_(tol), n_(cfg.graph.node_count()) {}

  Candidate solve(Mask mask) const {
    Candidate c;
    c.mask = mask;
    const auto s = members(mask);
    const auto k = static_cast<Eigen::Index>(s.size());
    Eigen::VectorXd xs;
    if (k > 0) {
      Eigen::MatrixXd system = Eigen::MatrixXd::Identity(k, k) + cfg_.delta * adjacency_(s, s);
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
      const double rcond = lu.rcond();
      if (!(rcond > 0) || 1.0 / rcond > tol_.max_condition) {
        c.outcome = Outcome::Singular;
        return c;
      }
      xs = lu.solve(Eigen::VectorXd::Ones(k));
      for (Eigen::Index i = 0; i < k; ++i) {
        if (!(xs(i) > 0)) return c;
        if (xs(i) <= tol_.activity) {
          c.outcome = Outcome::Ambiguous;
          return c;
        }
      }
    }
    std::vector<double> x(n_, 0.0);
    for (Eigen::Index i = 0; i < k; ++i) x[s[i]] = xs(i);
    for (std::size_t i = 0; i < n_; ++i) {
      if (mask & (Mask{1} << i)) continue;
      if (cfg_.delta * neighbor_sum(cfg_.graph, static_cast<NodeId>(i), x) < 1.0 - tol_.inequality) return c;
    }
    c.outcome = Outcome::Accepted;
    c.x = std::move(x);
    return c;
  }

 private:
  const GameConfig& cfg_;
  const Eigen::MatrixXd& adjacency_;
  const GameTolerances& tol_;
  std::size_t n_;
};

}  // namespace

EnumerationResult enumerate_equilibria(const GameConfig& cfg, std::size_t max_n, const GameTolerances& tol,
                                       std::size_t threads) {
  check_config(cfg);
  const std::size_t n = cfg.graph.node_count();
  if (n > max_n) {
    throw ArgumentError("equilibrium enumeration checks 2^n active sets; n = " + std::to_string(n) +
                        " exceeds the limit of " + std::to_string(max_n));
  }
  if (n >= 63) throw ArgumentError("equilibrium enumeration supports at most 62 nodes");

  const Eigen::MatrixXd adjacency = adjacency_matrix(cfg.graph);
  const SubsetSolver solver(cfg, adjacency, tol);
  const Mask total = Mask{1} << n;

  const std::size_t workers = resolve_threads(threads);
  std::vector<std::vector<Candidate>> found(workers);
  std::vector<std::size_t> ambiguous(workers, 0);
  parallel_for(
      static_cast<std::size_t>(total), workers,
      [&](std::size_t worker, std::size_t begin, std::size_t end) {
        for (std::size_t m = begin; m < end; ++m) {
          auto c = solver.solve(static_cast<Mask>(m));
          if (c.outcome == Outcome::Ambiguous) ++ambiguous[worker];
          if (c.outcome == Outcome::Accepted || c.outcome == Outcome::Singular) found[worker].push_back(std::move(c));
        }
      },
      1024);

  std::vector<Candidate> merged;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(merged));
  std::sort(merged.begin(), merged.end(), [](const Candidate& a, const Candidate& b) { return subset_order(a.mask, b.mask); });

  EnumerationResult out;
  out.subsets_checked = static_cast<std::size_t>(total);
  for (auto a : ambiguous) out.ambiguous_subsets += a;
  for (auto& c : merged) {
    if (c.outcome == Outcome::Singular) {
      out.singular_subsets.push_back(members(c.mask));
      continue;
    }
    const bool duplicate = std::any_of(out.equilibria.begin(), out.equilibria.end(), [&](const EquilibriumRecord& r) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::fabs(r.profile.x[i] - c.x[i]));
      return d < tol.duplicate;
    });
    if (duplicate) continue;
    EquilibriumRecord rec;
    rec.fixed_point_residual = fixed_point_residual(c.x, cfg);
    if (rec.fixed_point_residual > tol.fixed_point) continue;
    rec.kkt_residual = kkt_residual(c.x, cfg, tol.activity);
    for (double g : rec.kkt_residual) rec.kkt_max = std::max(rec.kkt_max, std::fabs(g));
    const auto st = classify_stability(c.x, cfg, tol);
    rec.stable = st.stable;
    rec.boundary = st.boundary;
    rec.profile.active_set = members(c.mask);
    rec.profile.x = std::move(c.x);
    out.equilibria.push_back(std::move(rec));
  }
  return out;
}

double uniqueness_threshold(const Graph& g) {
  if (g.edge_count() == 0) return kInf;
  return -1.0 / extreme_eigenvalues(g).lambda_min;
}

ActionProfile interior_equilibrium(const GameConfig& cfg) {
  check_config(cfg);
  const std::size_t n = cfg.graph.node_count();
  if (n == 0) return {};
  const double threshold = uniqueness_threshold(cfg.graph);
  // delta * |lambda_min| within rounding of 1 counts as on the threshold
  if (!(cfg.delta < threshold * (1.0 - 1e-12))) {
    throw ArgumentError("interior equilibrium requires delta < -1/lambda_min = " + std::to_string(threshold) +
                        " (got delta = " + std::to_string(cfg.delta) + ")");
  }
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) +
      cfg.delta * adjacency_matrix(cfg.graph);
  Eigen::LLT<Eigen::MatrixXd> llt(system);
  if (llt.info() != Eigen::Success) throw NumericalError("I + delta A is not positive definite");
  const Eigen::VectorXd x = llt.solve(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n)));
  std::vector<double> out(x.data(), x.data() + x.size());
  if (std::any_of(out.begin(), out.end(), [](double v) { return !(v > 0); })) {
    throw ArgumentError(
        "the unique equilibrium is not interior: (I + delta A)^-1 1 has a non-positive entry, so some agents are "
        "inactive; use enumerate_equilibria");
  }
  return make_profile(std::move(out));
}

std::string_view to_string(UniquenessStatus s) {
  switch (s) {
    case UniquenessStatus::UniqueByLambdaMin: return "UniqueByLambdaMin";
    case UniquenessStatus::UniqueBySpectralRadius: return "UniqueBySpectralRadius";
    case UniquenessStatus::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

UniquenessCertificate uniqueness_certificate(const GameConfig& cfg) {
  check_config(cfg);
  UniquenessCertificate cert;
  if (cfg.graph.edge_count() == 0) {
    cert.status = UniquenessStatus::UniqueByLambdaMin;
    cert.threshold_exact = cert.threshold_spectral_radius = cert.threshold_estimate = kInf;
    return cert;
  }
  const auto ext = extreme_eigenvalues(cfg.graph);
  cert.lambda_min = ext.lambda_min;
  cert.lambda_max = ext.lambda_max;
  cert.threshold_exact = -1.0 / ext.lambda_min;
  cert.threshold_spectral_radius = 1.0 / ext.lambda_max;
  const auto bounds = bounds_analytic_s2(moments_from_census(census(cfg.graph)));
  cert.threshold_estimate = bounds.alpha < 0 ? -1.0 / bounds.alpha : kInf;

  if (cfg.delta < cert.threshold_exact) {
    cert.status = UniquenessStatus::UniqueByLambdaMin;
  } else if (cfg.delta < cert.threshold_spectral_radius) {
    cert.status = UniquenessStatus::UniqueBySpectralRadius;
  } else {
    cert.status = UniquenessStatus::Inconclusive;
  }
  return cert;
}

DynamicsResult best_response_dynamics(const GameConfig& cfg, const std::vector<double>& x0,
                                      const DynamicsOptions& options) {
  check_config(cfg);
  check_size(x0, cfg);
  if (!(options.dt > 0 && options.dt <= 1)) throw ArgumentError("dt must lie in (0, 1]");
  if (!(options.tol > 0)) throw ArgumentError("tol must be positive");
  for (double v : x0)
    if (!(v >= 0 && v <= 1)) throw ArgumentError("initial actions must lie in [0, 1]");

  const std::size_t every =
      options.record_every ? options.record_every : std::max<std::size_t>(1, options.max_steps / 1000);
  DynamicsResult out;
  std::vector<double> x = x0;
  std::vector<double> f = best_response(x, cfg);
  auto residual_of = [&] {
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::fabs(f[i] - x[i]));
    return r;
  };
  double residual = residual_of();
  out.trajectory.push_back({0, x, residual});
  std::size_t step = 0;
  while (residual >= options.tol && step < options.max_steps) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += options.dt * (f[i] - x[i]);
    ++step;
    f = best_response(x, cfg);
    residual = residual_of();
    if (step % every == 0) out.trajectory.push_back({step, x, residual});
  }
  if (out.trajectory.back().step != step) out.trajectory.push_back({step, x, residual});
  out.converged = residual < options.tol;
  out.steps = step;
  out.residual = residual;
  out.limit = make_profile(std::move(x));
  return out;
}

}  // namespace netgame
