#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netgame {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable simple undirected graph stored as compressed sorted adjacency.
///
/// Every adjacency list is strictly increasing, symmetric and free of
/// self-loops. Node ids are dense in [0, node_count). An optional label
/// vector maps internal ids back to the identifiers seen at ingestion.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` nodes. Self-loops are dropped and duplicate or
  /// reversed edges are merged; the counts of each are reported through the
  /// optional out-parameters.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::size_t* self_loops = nullptr,
                          std::size_t* duplicates = nullptr);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;

  /// O(log d) membership test on the sorted adjacency of `u`.
  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Each undirected edge once, as (u, v) with u < v, in increasing order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// External identifier of `v`; the decimal id when the graph carries no labels.
  std::string label(NodeId v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find_label(const std::string& label) const;

  Graph with_labels(std::vector<std::string> labels) const&;
  Graph with_labels(std::vector<std::string> labels) &&;

  /// Subgraph induced on `nodes` (distinct, in range). New id i corresponds
  /// to nodes[i]; labels carry the original external identifiers.
  Graph induced_subgraph(std::span<const NodeId> nodes) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::string> labels_;
};

enum class Delimiter { Auto, Whitespace, Comma };

struct LoadOptions {
  Delimiter delimiter = Delimiter::Auto;
  std::string comment_prefix = "#";
};

struct LoadedGraph {
  Graph graph;
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

/// Parses an edge list: one edge per line, two identifier tokens separated by
/// whitespace or a comma. Identifiers are remapped to dense ids in first-seen
/// order. Tokens past the second are ignored (timestamps, weights).
LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options = {});
LoadedGraph load_edge_list_file(const std::string& path, const LoadOptions& options = {});
LoadedGraph load_edge_list_string(const std::string& text, const LoadOptions& options = {});

/// Writes one "u v" line per edge using external labels.
void write_edge_list(std::ostream& out, const Graph& g);

/// Induced subgraph on every node within BFS distance `radius` of `seed`.
/// Nodes are numbered in BFS discovery order, so the seed becomes node 0.
Graph ego_subgraph(const Graph& g, NodeId seed, std::size_t radius);

/// BFS hop distances from `source`; unreachable nodes get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, NodeId source);

struct Components {
  std::vector<NodeId> component_of;
  std::size_t count = 0;
};
Components connected_components(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  std::optional<std::vector<std::uint8_t>> coloring;
};
Bipartition is_bipartite(const Graph& g);

/// Bipartiteness of each connected component, indexed as in connected_components.
std::vector<bool> component_bipartite(const Graph& g, const Components& components);

std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace netgame
