#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "netgame/error.hpp"
#include "netgame/generators.hpp"
#include "netgame/graph.hpp"
#include "oracles.hpp"

using namespace netgame;

namespace {

void check_invariants(const Graph& g) {
  std::size_t total = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    total += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      CHECK(nb[i] != v);
      CHECK(nb[i] < g.node_count());
      if (i > 0) CHECK(nb[i - 1] < nb[i]);
      CHECK(g.has_edge(nb[i], v));
    }
  }
  CHECK(total == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("load: two-edge path") {
  auto r = load_edge_list_string("0 1\n1 2");
  CHECK(r.graph.node_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  auto nb = r.graph.neighbors(1);
  REQUIRE(nb.size() == 2);
  CHECK(nb[0] == 0);
  CHECK(nb[1] == 2);
}

TEST_CASE("load: duplicates merge") {
  auto r = load_edge_list_string("0 1\n1 0\n0 1");
  CHECK(r.graph.node_count() == 2);
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.duplicate_edges == 2);
}

TEST_CASE("load: self-loop dropped and counted") {
  auto r = load_edge_list_string("3 3\n3 4");
  CHECK(r.graph.node_count() == 2);
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.self_loops == 1);
  CHECK(r.graph.label(0) == "3");
  CHECK(r.graph.label(1) == "4");
}

TEST_CASE("load: comments, commas, blank lines, extra columns") {
  auto r = load_edge_list_string("# header\n\na,b\nb,c,1700000000\n  # indented comment\n");
  CHECK(r.graph.node_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.graph.find_label("c").value() == 2);
  CHECK_FALSE(r.graph.find_label("zz").has_value());
}

TEST_CASE("load: empty input is an empty graph") {
  auto r = load_edge_list_string("");
  CHECK(r.graph.node_count() == 0);
  CHECK(r.graph.edge_count() == 0);
}

TEST_CASE("load: malformed line reports its number") {
  try {
    load_edge_list_string("0 1\n# c\n7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("load: missing file") {
  CHECK_THROWS_AS(load_edge_list_file("/nonexistent/graph.txt"), Error);
}

TEST_CASE("write/load round trip keeps labels") {
  auto r = load_edge_list_string("x y\ny z\nz x\nz w\n");
  std::ostringstream out;
  write_edge_list(out, r.graph);
  auto back = load_edge_list_string(out.str());
  CHECK(back.graph.node_count() == 4);
  CHECK(back.graph.edge_count() == 4);
  for (auto [u, v] : r.graph.edges()) {
    auto a = back.graph.find_label(r.graph.label(u));
    auto b = back.graph.find_label(r.graph.label(v));
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(back.graph.has_edge(*a, *b));
  }
}

TEST_CASE("randomized construction keeps invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    std::vector<Edge> e;
    const std::size_t m = rng() % 120;
    for (std::size_t i = 0; i < m; ++i) e.emplace_back(rng() % n, rng() % n);
    std::size_t loops = 0, dups = 0;
    auto g = Graph::from_edges(n, e, &loops, &dups);
    check_invariants(g);
    std::set<std::pair<NodeId, NodeId>> distinct;
    std::size_t expected_loops = 0;
    for (auto [u, v] : e) {
      if (u == v) {
        ++expected_loops;
        continue;
      }
      distinct.insert({std::min(u, v), std::max(u, v)});
    }
    CHECK(g.edge_count() == distinct.size());
    CHECK(loops == expected_loops);
    CHECK(dups == m - expected_loops - distinct.size());
  }
}

TEST_CASE("ego: path, radius 1") {
  auto g = gen::path(5);
  auto sub = ego_subgraph(g, 2, 1);
  CHECK(sub.node_count() == 3);
  CHECK(sub.edge_count() == 2);
  std::set<std::string> labels(sub.labels().begin(), sub.labels().end());
  CHECK(labels == std::set<std::string>{"1", "2", "3"});
  CHECK(sub.label(0) == "2");
}

TEST_CASE("ego: radius 0 is a single node") {
  auto sub = ego_subgraph(gen::petersen(), 4, 0);
  CHECK(sub.node_count() == 1);
  CHECK(sub.edge_count() == 0);
}

TEST_CASE("ego: 5-cycle radius 2 is everything") {
  auto sub = ego_subgraph(gen::cycle(5), 0, 2);
  CHECK(sub.node_count() == 5);
  CHECK(sub.edge_count() == 5);
}

TEST_CASE("ego: seed out of range") {
  CHECK_THROWS_AS(ego_subgraph(gen::path(3), 3, 1), ArgumentError);
}

TEST_CASE("ego: matches an independent distance computation") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = gen::erdos_renyi(25, 0.08, seed);
    const auto d = oracle::all_pairs_distances(g);
    for (NodeId s = 0; s < g.node_count(); s += 6) {
      for (std::size_t r = 0; r <= 3; ++r) {
        auto sub = ego_subgraph(g, s, r);
        std::set<NodeId> expect;
        for (NodeId v = 0; v < g.node_count(); ++v)
          if (d[s][v] <= r) expect.insert(v);
        std::vector<NodeId> orig;
        for (NodeId v = 0; v < sub.node_count(); ++v) orig.push_back(static_cast<NodeId>(std::stoul(sub.label(v))));
        CHECK(std::set<NodeId>(orig.begin(), orig.end()) == expect);
        std::size_t inside = 0;
        for (auto [u, v] : g.edges())
          if (expect.count(u) && expect.count(v)) ++inside;
        CHECK(sub.edge_count() == inside);
        for (auto [u, v] : sub.edges()) CHECK(g.has_edge(orig[u], orig[v]));
      }
    }
  }
}

TEST_CASE("bfs distances agree with Floyd-Warshall") {
  auto g = gen::disjoint_union(gen::cycle(7), gen::path(4));
  const auto d = oracle::all_pairs_distances(g);
  for (NodeId s = 0; s < g.node_count(); ++s) {
    auto b = bfs_distances(g, s);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (d[s][v] > g.node_count())
        CHECK(b[v] == SIZE_MAX);
      else
        CHECK(b[v] == d[s][v]);
    }
  }
}

TEST_CASE("bipartite examples") {
  auto c4 = is_bipartite(gen::cycle(4));
  CHECK(c4.bipartite);
  REQUIRE(c4.coloring.has_value());
  CHECK_FALSE(is_bipartite(gen::complete(3)).bipartite);
  CHECK_FALSE(is_bipartite(gen::disjoint_union(gen::complete(3), gen::path(2))).bipartite);
  CHECK(is_bipartite(gen::empty(0)).bipartite);
}

TEST_CASE("bipartite agrees with exhaustive colouring on small graphs") {
  // every labelled graph up to 6 nodes, then random graphs on 7 and 8
  auto check = [](const Graph& g) {
    auto b = is_bipartite(g);
    CHECK(b.bipartite == oracle::bipartite_by_search(g));
    if (b.bipartite) {
      REQUIRE(b.coloring.has_value());
      for (auto [u, v] : g.edges()) CHECK((*b.coloring)[u] != (*b.coloring)[v]);
    }
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) check(oracle::graph_from_mask(n, mask));
  }
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 7 + seed % 2;
    check(gen::erdos_renyi(n, 0.1 + 0.05 * static_cast<double>(seed % 8), seed));
  }
}

TEST_CASE("components") {
  auto g = gen::disjoint_union(gen::disjoint_union(gen::complete(3), gen::path(2)), gen::empty(2));
  auto c = connected_components(g);
  CHECK(c.count == 4);
  auto bip = component_bipartite(g, c);
  CHECK_FALSE(bip[c.component_of[0]]);
  CHECK(bip[c.component_of[3]]);
  CHECK(bip[c.component_of[5]]);
}

TEST_CASE("degree sequences") {
  CHECK(degree_sequence(gen::complete(3)) == std::vector<std::size_t>{2, 2, 2});
  CHECK(degree_sequence(gen::star(4)) == std::vector<std::size_t>{4, 1, 1, 1, 1});
  CHECK(degree_sequence(gen::empty(3)) == std::vector<std::size_t>{0, 0, 0});
  auto g = gen::barabasi_albert(200, 3, 5);
  std::size_t sum = 0;
  for (auto d : degree_sequence(g)) sum += d;
  CHECK(sum == 2 * g.edge_count());
}

TEST_CASE("generators are deterministic and well formed") {
  auto a = gen::social_mix(500, 9), b = gen::social_mix(500, 9);
  CHECK(a.edges() == b.edges());
  check_invariants(a);
  CHECK(gen::petersen().edge_count() == 15);
  CHECK(gen::complete_bipartite(2, 3).edge_count() == 6);
  CHECK(gen::watts_strogatz(30, 2, 0.0, 1).edge_count() == 60);
}
