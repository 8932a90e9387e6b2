#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "netgame/census.hpp"
#include "netgame/generators.hpp"
#include "oracles.hpp"

using namespace netgame;

namespace {

void check_against_oracle(const Graph& g) {
  const auto c = census(g);
  CHECK(c.triangles_per_node == oracle::cycles_through_node(g, 3));
  CHECK(c.quadrangles_per_node == oracle::cycles_through_node(g, 4));
  CHECK(c.pentagons_per_node == oracle::cycles_through_node(g, 5));
}

Count sum(const std::vector<Count>& v) {
  Count s = 0;
  for (auto x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("triangles") {
  auto k3 = census(gen::complete(3));
  CHECK(k3.triangles_per_node == std::vector<Count>{1, 1, 1});
  CHECK(k3.triangles == 1);
  auto k4 = census(gen::complete(4));
  CHECK(k4.triangles_per_node == std::vector<Count>(4, 3));
  CHECK(k4.triangles == 4);
  CHECK(triangle_counts(gen::cycle(5)) == std::vector<Count>(5, 0));
}

TEST_CASE("quadrangles") {
  auto c4 = census(gen::cycle(4));
  CHECK(c4.quadrangles_per_node == std::vector<Count>(4, 1));
  CHECK(c4.quadrangles == 1);
  auto k4 = census(gen::complete(4));
  CHECK(k4.quadrangles_per_node == std::vector<Count>(4, 3));
  CHECK(k4.quadrangles == 3);
  CHECK(census(gen::petersen()).quadrangles == 0);
}

TEST_CASE("pentagons") {
  auto c5 = census(gen::cycle(5));
  CHECK(c5.pentagons_per_node == std::vector<Count>(5, 1));
  CHECK(c5.pentagons == 1);
  CHECK(census(gen::complete(4)).pentagons == 0);
  auto p = census(gen::petersen());
  CHECK(p.pentagons_per_node == std::vector<Count>(10, 6));
  CHECK(p.pentagons == 12);
  CHECK(pentagon_counts(gen::complete(5)) == std::vector<Count>(5, 12));
}

TEST_CASE("aggregate census") {
  auto k4 = census(gen::complete(4));
  CHECK(k4.n == 4);
  CHECK(k4.e == 6);
  CHECK(k4.W2 == 36);
  CHECK(k4.C_dt == 36);
  auto e5 = census(gen::empty(5));
  CHECK(e5.n == 5);
  CHECK(e5.e == 0);
  CHECK(e5.triangles + e5.quadrangles + e5.pentagons + e5.W2 + e5.C_dt == 0);
  auto zero = census(gen::empty(0));
  CHECK(zero.n == 0);
}

TEST_CASE("per-node counts match brute force on every graph up to 6 nodes") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; mask += (n == 6 ? 7 : 1)) check_against_oracle(oracle::graph_from_mask(n, mask));
  }
}

TEST_CASE("per-node counts match brute force on 200 random graphs up to 10 nodes") {
  const double ps[] = {0.2, 0.5, 0.8};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 4 + seed % 7;
    check_against_oracle(gen::erdos_renyi(n, ps[seed % 3], 1000 + seed));
  }
}

TEST_CASE("divisibility and degree identities") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen::social_mix(300, seed);
    auto c = census(g);
    CHECK(sum(c.triangles_per_node) == 3 * c.triangles);
    CHECK(sum(c.quadrangles_per_node) == 4 * c.quadrangles);
    CHECK(sum(c.pentagons_per_node) == 5 * c.pentagons);
    CHECK(c.W2 >= 2 * c.e);
    Count cdt = 0;
    for (std::size_t i = 0; i < c.n; ++i) cdt += c.degree[i] * c.triangles_per_node[i];
    CHECK(cdt == c.C_dt);
  }
  CHECK(census(gen::path(2)).W2 == 2);
  CHECK(census(gen::disjoint_union(gen::path(2), gen::path(2))).W2 == 4);
}

TEST_CASE("results do not depend on worker count") {
  auto g = gen::social_mix(800, 3);
  auto a = census(g, {1});
  auto b = census(g, {4});
  CHECK(a.triangles_per_node == b.triangles_per_node);
  CHECK(a.quadrangles_per_node == b.quadrangles_per_node);
  CHECK(a.pentagons_per_node == b.pentagons_per_node);
  CHECK(a.C_dt == b.C_dt);
}
