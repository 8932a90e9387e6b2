#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "netgame/graph.hpp"

namespace netgame {

/// Linear inverse demand a - b(q_i + 2 delta sum_j a_ij q_j) with marginal cost d.
struct CournotParameters {
  double a = 0.0;
  double b = 1.0;  // > 0
  double d = 0.0;  // < a
  /// Quantity an agent produces in isolation, (a - d) / (2b).
  double isolated_quantity() const { return (a - d) / (2 * b); }
};

/// A game with best responses f_i(x) = max(0, 1 - delta sum_j a_ij x_j),
/// i.e. actions normalised so that an isolated agent plays 1.
struct GameConfig {
  Graph graph;
  double delta = 0.0;  // >= 0; substitutes
  std::optional<CournotParameters> cournot;
};

struct GameTolerances {
  double activity = 1e-10;       // x_i > activity counts as active
  double fixed_point = 1e-9;     // max_i |x_i - f_i(x)| for an accepted equilibrium
  double inequality = 1e-9;      // slack on delta (A x)_i >= 1 for inactive agents
  double stability = 1e-9;       // margin for the strict stability inequalities
  double max_condition = 1e12;   // subsets with a worse-conditioned system are skipped
  double duplicate = 1e-8;       // L-infinity distance under which profiles coincide
};

struct ActionProfile {
  std::vector<double> x;
  std::vector<NodeId> active_set;
};

ActionProfile make_profile(std::vector<double> x, double activity_tol = GameTolerances{}.activity);

/// U_i = q_i (a - b (q_i + 2 delta sum_j a_ij q_j)) - d q_i with q = x * isolated_quantity.
double payoff(NodeId i, const std::vector<double>& x, const GameConfig& cfg);

double neighbor_sum(const Graph& g, NodeId i, const std::vector<double>& x);
double best_response(NodeId i, const std::vector<double>& x, const GameConfig& cfg);
std::vector<double> best_response(const std::vector<double>& x, const GameConfig& cfg);
/// max_i |f_i(x) - x_i|
double fixed_point_residual(const std::vector<double>& x, const GameConfig& cfg);

/// phi(x) = sum_i (x_i - x_i^2 / 2) - (delta / 2) sum_ij a_ij x_i x_j
double potential(const std::vector<double>& x, const GameConfig& cfg);
/// g_i = 1 - x_i - delta sum_j a_ij x_j
std::vector<double> potential_gradient(const std::vector<double>& x, const GameConfig& cfg);
/// g_i for active agents, max(0, g_i) for inactive ones; zero exactly at KKT points of max phi s.t. x >= 0.
std::vector<double> kkt_residual(const std::vector<double>& x, const GameConfig& cfg,
                                 double activity_tol = GameTolerances{}.activity);

struct StabilityReport {
  bool stable = false;
  /// One of the strict inequalities holds only with equality (within tolerance).
  bool boundary = false;
  double lambda_min_active = 0.0;
};

/// Local asymptotic stability of an equilibrium: delta < -1/lambda_min(A_S) and
/// delta sum_j a_ij x_j > 1 for every inactive i. Throws if x is not an equilibrium.
StabilityReport classify_stability(const std::vector<double>& x, const GameConfig& cfg,
                                   const GameTolerances& tol = {});
bool stability_check(const std::vector<double>& x, const GameConfig& cfg, const GameTolerances& tol = {});

struct EquilibriumRecord {
  ActionProfile profile;
  bool stable = false;
  bool boundary = false;
  std::vector<double> kkt_residual;
  double kkt_max = 0.0;
  double fixed_point_residual = 0.0;
};

struct EnumerationResult {
  std::vector<EquilibriumRecord> equilibria;
  std::size_t subsets_checked = 0;
  /// Active sets skipped because I + delta A_S is numerically singular.
  std::vector<std::vector<NodeId>> singular_subsets;
  /// Candidate solutions rejected for having components in (0, activity tolerance].
  std::size_t ambiguous_subsets = 0;
};

constexpr std::size_t kDefaultMaxEnumerationNodes = 25;

/// Checks every active set S: solves (I + delta A_S) x_S = 1 and accepts when
/// x_S > 0 and delta A_{N\S,S} x_S >= 1. Subsets are visited by size, then
/// lexicographically; the output follows that order.
EnumerationResult enumerate_equilibria(const GameConfig& cfg, std::size_t max_n = kDefaultMaxEnumerationNodes,
                                       const GameTolerances& tol = {}, std::size_t threads = 1);

/// -1 / lambda_min(A); +infinity for edgeless graphs.
double uniqueness_threshold(const Graph& g);

/// Solves (I + delta A) x = 1. Requires delta < -1/lambda_min(A), which makes the
/// equilibrium unique but not necessarily interior: when the solution has a
/// non-positive entry (e.g. the centre of a star) an ArgumentError is thrown.
/// For delta < 1/max_degree the solution is always positive.
ActionProfile interior_equilibrium(const GameConfig& cfg);

enum class UniquenessStatus { UniqueByLambdaMin, UniqueBySpectralRadius, Inconclusive };
std::string_view to_string(UniquenessStatus s);

struct UniquenessCertificate {
  UniquenessStatus status = UniquenessStatus::Inconclusive;
  double threshold_exact = 0.0;            // -1 / lambda_min
  double threshold_spectral_radius = 0.0;  // 1 / rho
  /// -1 / alpha_2 from moment bounds. An estimate only: alpha_2 >= lambda_min
  /// makes it an upper bound on threshold_exact, so it never certifies.
  double threshold_estimate = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

UniquenessCertificate uniqueness_certificate(const GameConfig& cfg);

struct DynamicsOptions {
  double dt = 0.5;
  std::size_t max_steps = 1'000'000;
  double tol = 1e-8;
  /// Keep every k-th iterate; 0 picks k so that about 1000 samples are kept.
  std::size_t record_every = 0;
};

struct TrajectorySample {
  std::size_t step = 0;
  std::vector<double> x;
  double residual = 0.0;
};

struct DynamicsResult {
  std::vector<TrajectorySample> trajectory;
  bool converged = false;
  std::size_t steps = 0;
  double residual = 0.0;
  ActionProfile limit;
};

/// Explicit Euler on dx/dt = f(x) - x, stopping when ||f(x) - x||_inf < tol.
DynamicsResult best_response_dynamics(const GameConfig& cfg, const std::vector<double>& x0,
                                      const DynamicsOptions& options = {});

}  // namespace netgame
