#include "netgame/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include "netgame/error.hpp"
#include "netgame/generators.hpp"
#include "netgame/parallel.hpp"
#include "netgame/report.hpp"

namespace netgame {

std::vector<NodeId> sample_seed_nodes(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) {
    throw ArgumentError("cannot sample " + std::to_string(k) + " distinct seed nodes from " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), NodeId{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + gen::uniform_below(rng, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

ExperimentRow analyze_subgraph(const Graph& sub, std::size_t id, std::string seed_label) {
  using clock = std::chrono::steady_clock;
  ExperimentRow row;
  row.subgraph_id = id;
  row.seed_label = std::move(seed_label);

  const auto t0 = clock::now();
  const auto c = census(sub);
  const auto t1 = clock::now();
  const auto moments = moments_from_census(c);
  row.order1 = bounds_analytic_s1(moments);
  row.order2 = bounds_analytic_s2(moments);
  const auto t2 = clock::now();
  row.alpha2_bisect = alpha_bisect(moments, 2).value;
  row.beta2_bisect = beta_bisect(moments, 2).value;
  row.extremes = extreme_eigenvalues(sub);

  row.n = c.n;
  row.e = c.e;
  row.triangles = c.triangles;
  row.quadrangles = c.quadrangles;
  row.pentagons = c.pentagons;
  row.W2 = c.W2;
  row.C_dt = c.C_dt;
  row.m = moments.m;
  row.census_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  row.bounds_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  return row;
}

bool satisfies_sandwich(const ExperimentRow& r, double tol) {
  return r.extremes.lambda_min <= r.order2.alpha + tol && r.order2.alpha <= r.order1.alpha + tol &&
         r.order1.beta <= r.order2.beta + tol && r.order2.beta <= r.extremes.lambda_max + tol;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> rank(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) rank[idx[t]] = r;
    i = j + 1;
  }
  return rank;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("spearman: length mismatch");
  if (x.size() < 2) return std::nan("");
  const auto rx = average_ranks(x), ry = average_ranks(y);
  const double mean = 0.5 * static_cast<double>(x.size() + 1);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0 || syy == 0) return std::nan("");
  return sxy / std::sqrt(sxx * syy);
}

ExperimentResult run_experiment(const Graph& g, const ExperimentOptions& options) {
  if (options.num_subgraphs == 0) throw ArgumentError("--num-subgraphs must be at least 1");
  const auto seeds = sample_seed_nodes(g.node_count(), options.num_subgraphs, options.rng_seed);

  ExperimentResult result;
  result.rows.resize(seeds.size());
  parallel_for(
      seeds.size(), options.threads,
      [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          const Graph sub = ego_subgraph(g, seeds[i], options.radius);
          result.rows[i] = analyze_subgraph(sub, i, g.label(seeds[i]));
        }
      },
      1);

  std::vector<double> lmin, a2, lmax, b2;
  for (const auto& r : result.rows) {
    lmin.push_back(r.extremes.lambda_min);
    a2.push_back(r.order2.alpha);
    lmax.push_back(r.extremes.lambda_max);
    b2.push_back(r.order2.beta);
    if (!satisfies_sandwich(r)) ++result.summary.sandwich_violations;
  }
  result.summary.spearman_lambda_min_alpha2 = spearman(lmin, a2);
  result.summary.spearman_lambda_max_beta2 = spearman(lmax, b2);
  return result;
}

void write_experiment_csv(std::ostream& out, std::span<const ExperimentRow> rows, bool timings) {
  out << "subgraph_id,seed_node,n,e,triangles,quadrangles,pentagons,W2,C_dt,m1,m2,m3,m4,m5,"
         "alpha1,beta1,alpha2,beta2,alpha2_bisect,beta2_bisect,lambda_min,lambda_max,degenerate";
  if (timings) out << ",census_ms,bounds_ms";
  out << '\n';
  using report::format_double;
  for (const auto& r : rows) {
    out << r.subgraph_id << ',' << r.seed_label << ',' << r.n << ',' << r.e << ',' << r.triangles << ','
        << r.quadrangles << ',' << r.pentagons << ',' << r.W2 << ',' << r.C_dt;
    for (int k = 1; k <= 5; ++k) out << ',' << format_double(r.m[k]);
    out << ',' << format_double(r.order1.alpha) << ',' << format_double(r.order1.beta) << ','
        << format_double(r.order2.alpha) << ',' << format_double(r.order2.beta) << ','
        << format_double(r.alpha2_bisect) << ',' << format_double(r.beta2_bisect) << ','
        << format_double(r.extremes.lambda_min) << ',' << format_double(r.extremes.lambda_max) << ','
        << (r.order2.degenerate ? 1 : 0);
    if (timings) out << ',' << format_double(r.census_ms) << ',' << format_double(r.bounds_ms);
    out << '\n';
  }
}

}  // namespace netgame
