#include "netgame/report.hpp"

#include <charconv>
#include <cmath>

namespace netgame::report {

using nlohmann::json;

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

json census_json(const StructuralCensus& c, bool per_node) {
  json j = {{"n", c.n},
            {"e", c.e},
            {"triangles", c.triangles},
            {"quadrangles", c.quadrangles},
            {"pentagons", c.pentagons},
            {"W2", c.W2},
            {"C_dt", c.C_dt}};
  if (per_node) {
    j["degree"] = c.degree;
    j["triangles_per_node"] = c.triangles_per_node;
    j["quadrangles_per_node"] = c.quadrangles_per_node;
    j["pentagons_per_node"] = c.pentagons_per_node;
  }
  return j;
}

json moments_json(const MomentSequence& m, const std::optional<SpectrumExtremes>& extremes,
                  const std::optional<std::vector<Count>>& oracle) {
  json j = {{"n", m.n}};
  for (int k = 1; k <= MomentSequence::kMaxOrder; ++k) j["m" + std::to_string(k)] = m.m[k];
  if (m.walks) {
    j["walk_counts"] = std::vector<Count>(m.walks->begin() + 1, m.walks->end());
  } else {
    j["walk_counts"] = nullptr;
  }
  if (extremes) {
    j["lambda_min"] = extremes->lambda_min;
    j["lambda_max"] = extremes->lambda_max;
  }
  if (oracle) {
    j["walk_counts_direct"] = std::vector<Count>(oracle->begin() + 1, oracle->end());
    bool match = m.walks.has_value();
    for (std::size_t k = 1; match && k < oracle->size(); ++k) match = (*m.walks)[k] == (*oracle)[k];
    j["walk_counts_match"] = match;
  }
  return j;
}

json bounds_json(const SupportBounds& b) {
  json j = {{"s", b.s},
            {"alpha", number(b.alpha)},
            {"beta", number(b.beta)},
            {"method", std::string(to_string(b.method))},
            {"degenerate", b.degenerate},
            {"effective_order", b.effective_order},
            {"bracket", {number(b.bracket[0]), number(b.bracket[1])}},
            {"iterations", b.iterations}};
  if (!b.diagnostic.empty()) j["diagnostic"] = b.diagnostic;
  return j;
}

json equilibria_json(const GameConfig& cfg, const EnumerationResult& result, const UniquenessCertificate& cert) {
  json list = json::array();
  for (const auto& r : result.equilibria) {
    json item = {{"x", r.profile.x},
                 {"active_set", r.profile.active_set},
                 {"stable", r.stable},
                 {"kkt_max", r.kkt_max},
                 {"fixed_point_residual", r.fixed_point_residual},
                 {"delta_singular_count", result.singular_subsets.size()}};
    if (r.boundary) item["annotation"] = "boundary";
    list.push_back(std::move(item));
  }
  return {{"delta", cfg.delta},
          {"n", cfg.graph.node_count()},
          {"threshold_exact", number(cert.threshold_exact)},
          {"threshold_spectral_radius", number(cert.threshold_spectral_radius)},
          {"threshold_estimate", number(cert.threshold_estimate)},
          {"status", std::string(to_string(cert.status))},
          {"subsets_checked", result.subsets_checked},
          {"delta_singular_count", result.singular_subsets.size()},
          {"ambiguous_count", result.ambiguous_subsets},
          {"count", result.equilibria.size()},
          {"equilibria", std::move(list)}};
}

}  // namespace netgame::report
