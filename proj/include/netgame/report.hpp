#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "netgame/census.hpp"
#include "netgame/game.hpp"
#include "netgame/moment_bounds.hpp"
#include "netgame/spectral.hpp"

// JSON documents emitted by the command-line tools and the Python module.
// Non-finite numbers (infinite thresholds) serialise as null.
namespace netgame::report {

nlohmann::json census_json(const StructuralCensus& c, bool per_node);

/// {n, m1..m5, walk_counts, lambda_min, lambda_max}; walk_counts are the
/// census-derived n*m_k. `oracle` adds the directly counted closed walks.
nlohmann::json moments_json(const MomentSequence& m, const std::optional<SpectrumExtremes>& extremes,
                            const std::optional<std::vector<Count>>& oracle = std::nullopt);

/// {s, alpha, beta, method, degenerate, bracket, iterations, ...}
nlohmann::json bounds_json(const SupportBounds& b);

/// {delta, threshold_exact, threshold_estimate, status, equilibria: [{x, active_set, stable, kkt_max, ...}]}
nlohmann::json equilibria_json(const GameConfig& cfg, const EnumerationResult& result,
                               const UniquenessCertificate& cert);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

}  // namespace netgame::report
