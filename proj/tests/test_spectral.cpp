#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "netgame/error.hpp"
#include "netgame/generators.hpp"
#include "netgame/spectral.hpp"
#include "oracles.hpp"

using namespace netgame;
using doctest::Approx;

namespace {

void check_moments(const MomentSequence& m, std::array<double, 6> expect) {
  for (int k = 0; k <= 5; ++k) CHECK(m[k] == Approx(expect[k]).epsilon(1e-15));
}

}  // namespace

TEST_CASE("moments: K3") {
  auto m = moments_from_census(census(gen::complete(3)));
  check_moments(m, {1, 0, 2, 2, 6, 10});
  REQUIRE(m.walks.has_value());
  CHECK((*m.walks)[4] == 18);
  CHECK((*m.walks)[5] == 30);
}

TEST_CASE("moments: single edge") {
  check_moments(moments_from_census(census(gen::path(2))), {1, 0, 1, 0, 1, 0});
}

TEST_CASE("moments: empty census is rejected") {
  CHECK_THROWS_AS(moments_from_census(census(gen::empty(0))), ArgumentError);
}

TEST_CASE("moments: edgeless graph") {
  check_moments(moments_from_census(census(gen::empty(4))), {1, 0, 0, 0, 0, 0});
}

TEST_CASE("moments: printed aggregates") {
  CensusAggregates a;
  a.n = 1;
  a.e = 9.478;
  a.triangles = 28.15;
  a.quadrangles = 825.3;
  a.pentagons = 31794;
  a.W2 = 1318;
  a.C_dt = 8520;
  auto m = moments_from_aggregates(a);
  CHECK(std::abs(m[2] - 18.95) <= 0.01);
  CHECK(std::abs(m[3] - 168.9) <= 0.1);
  CHECK(std::abs(m[4] - 9219.4) <= 0.5);
  CHECK(std::abs(m[5] - 402310) <= 100);
  // one fewer e/n than the printed formula
  CHECK(std::abs((m[4] + a.e) - (8 * a.quadrangles + 2 * a.W2 - a.e)) < 1e-9);
}

TEST_CASE("walk counts: examples") {
  auto edge = closed_walk_counts(gen::path(2), 5);
  CHECK(edge == std::vector<Count>{2, 0, 2, 0, 2, 0});
  auto k3 = closed_walk_counts(gen::complete(3), 3);
  CHECK(k3[3] == 6);
  CHECK(closed_walk_counts(gen::petersen(), 1)[1] == 0);
  CHECK_THROWS_AS(closed_walk_counts(gen::path(3), 6), ArgumentError);
}

TEST_CASE("walk counts agree with dense matrix powers") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gen::erdos_renyi(5 + seed % 20, 0.3, seed);
    auto w = closed_walk_counts(g, 5, 1 + seed % 3);
    for (int k = 1; k <= 5; ++k) CHECK(static_cast<std::int64_t>(w[k]) == oracle::trace_power(g, k));
  }
}

TEST_CASE("census moments equal walk counts exactly") {
  const double ps[] = {0.2, 0.5, 0.8};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = gen::erdos_renyi(4 + seed % 9, ps[seed % 3], seed);
    auto c = census(g);
    auto direct = closed_walk_counts(g, 5);
    auto from_census = walk_counts_from_census(c);
    for (int k = 1; k <= 5; ++k) CHECK(from_census[k] == direct[k]);
  }
}

TEST_CASE("moment inequalities") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto m = moments_from_census(census(gen::erdos_renyi(12, 0.3, seed)));
    CHECK(m[1] == 0.0);
    CHECK(m[2] >= 0.0);
    CHECK(m[4] >= m[2] * m[2] - 1e-12);
  }
}

TEST_CASE("extremes: fixed spectra") {
  for (std::size_t k = 2; k <= 8; ++k) {
    auto x = extreme_eigenvalues(gen::complete(k));
    CHECK(x.lambda_min == Approx(-1.0).epsilon(1e-12));
    CHECK(x.lambda_max == Approx(static_cast<double>(k) - 1).epsilon(1e-12));
  }
  auto c4 = extreme_eigenvalues(gen::cycle(4));
  CHECK(c4.lambda_min == Approx(-2.0).epsilon(1e-12));
  CHECK(c4.lambda_max == Approx(2.0).epsilon(1e-12));
  auto one = extreme_eigenvalues(gen::empty(1));
  CHECK(one.lambda_min == 0.0);
  CHECK(one.lambda_max == 0.0);
  auto c5 = extreme_eigenvalues(gen::cycle(5));
  CHECK(c5.lambda_min == Approx(2 * std::cos(4 * std::numbers::pi / 5)).epsilon(1e-12));
  auto p = extreme_eigenvalues(gen::petersen());
  CHECK(p.lambda_min == Approx(-2.0).epsilon(1e-12));
  CHECK(p.lambda_max == Approx(3.0).epsilon(1e-12));
}

TEST_CASE("extremes: standard inequalities") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen::erdos_renyi(30, 0.15, seed);
    auto x = extreme_eigenvalues(g);
    const double n = static_cast<double>(g.node_count());
    CHECK(x.lambda_min <= 1e-12);
    CHECK(x.lambda_max >= -x.lambda_min - 1e-9);
    CHECK(x.lambda_max <= static_cast<double>(g.max_degree()) + 1e-9);
    CHECK(x.lambda_max >= 2.0 * static_cast<double>(g.edge_count()) / n - 1e-9);
  }
}

TEST_CASE("extremes: bipartite graphs have symmetric extremes") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gen::complete_bipartite(2 + seed % 4, 3 + seed % 5);
    auto x = extreme_eigenvalues(g);
    CHECK(std::abs(x.lambda_max + x.lambda_min) <= 1e-9);
  }
  auto x = extreme_eigenvalues(gen::disjoint_union(gen::cycle(6), gen::path(5)));
  CHECK(std::abs(x.lambda_max + x.lambda_min) <= 1e-9);
}

TEST_CASE("spectral comparison") {
  auto edge = spectral_comparison(gen::path(2));
  CHECK(edge.neg_inv_lambda_min == Approx(1.0));
  CHECK(edge.inv_rho == Approx(1.0));
  CHECK_FALSE(edge.strict);

  auto k3 = spectral_comparison(gen::complete(3));
  CHECK(k3.neg_inv_lambda_min == Approx(1.0));
  CHECK(k3.inv_rho == Approx(0.5));
  CHECK(k3.strict);

  auto mixed = spectral_comparison(gen::disjoint_union(gen::complete(3), gen::path(2)));
  CHECK(mixed.neg_inv_lambda_min == Approx(1.0));
  CHECK(mixed.inv_rho == Approx(0.5));
  CHECK_FALSE(mixed.strict);
  CHECK(mixed.numerically_strict);

  CHECK_THROWS_AS(spectral_comparison(gen::empty(3)), ArgumentError);
}

TEST_CASE("threshold ordering holds on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen::erdos_renyi(15, 0.25, seed);
    if (g.edge_count() == 0) continue;
    auto s = spectral_comparison(g);
    CHECK(s.neg_inv_lambda_min >= s.inv_rho - 1e-12);
    if (s.strict) CHECK(s.neg_inv_lambda_min > s.inv_rho);
  }
}
