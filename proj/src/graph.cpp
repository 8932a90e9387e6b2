#include "netgame/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "netgame/error.hpp"

namespace netgame {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t* self_loops,
                        std::size_t* duplicates) {
  if (n > std::numeric_limits<NodeId>::max()) throw ArgumentError("node count exceeds NodeId range");

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t loops = 0;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ArgumentError("edge endpoint out of range");
    if (u == v) {
      ++loops;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  auto last = std::unique(canon.begin(), canon.end());
  std::size_t dups = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Lower neighbours first, then higher ones; both passes arrive in increasing order.
  for (auto [u, v] : canon) {
    g.targets_[cursor[v]++] = u;
  }
  for (auto [u, v] : canon) {
    g.targets_[cursor[u]++] = v;
  }

  if (self_loops) *self_loops = loops;
  if (duplicates) *duplicates = dups;
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < node_count(); ++v) best = std::max(best, degree(static_cast<NodeId>(v)));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(NodeId v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<NodeId> Graph::find_label(const std::string& label) const {
  if (labels_.empty()) {
    NodeId v = 0;
    auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), v);
    if (ec != std::errc{} || ptr != label.data() + label.size() || v >= node_count()) return std::nullopt;
    return v;
  }
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

Graph Graph::with_labels(std::vector<std::string> labels) const& {
  Graph copy = *this;
  return std::move(copy).with_labels(std::move(labels));
}

Graph Graph::with_labels(std::vector<std::string> labels) && {
  if (!labels.empty() && labels.size() != node_count()) throw ArgumentError("label count does not match node count");
  labels_ = std::move(labels);
  return std::move(*this);
}

Graph Graph::induced_subgraph(std::span<const NodeId> nodes) const {
  constexpr NodeId absent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> remap(node_count(), absent);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= node_count()) throw ArgumentError("induced_subgraph: node out of range");
    if (remap[nodes[i]] != absent) throw ArgumentError("induced_subgraph: repeated node");
    remap[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<Edge> sub;
  for (NodeId u : nodes) {
    for (NodeId v : neighbors(u)) {
      if (u < v && remap[v] != absent) sub.emplace_back(remap[u], remap[v]);
    }
  }
  std::vector<std::string> names;
  names.reserve(nodes.size());
  for (NodeId u : nodes) names.push_back(label(u));
  return from_edges(nodes.size(), sub).with_labels(std::move(names));
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line, Delimiter delimiter) {
  bool comma = delimiter == Delimiter::Comma ||
               (delimiter == Delimiter::Auto && line.find(',') != std::string_view::npos);
  std::vector<std::string_view> tokens;
  auto is_sep = [&](char c) {
    if (comma) return c == ',';
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  auto trim = [](std::string_view s) {
    const char* ws = " \t\r\v\f";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return std::string_view{};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || is_sep(line[i])) {
      auto tok = trim(line.substr(start, i - start));
      if (!tok.empty()) {
        tokens.push_back(tok);
      } else if (comma && i < line.size()) {
        tokens.push_back(tok);  // empty field between commas is kept so it can be rejected
      }
      start = i + 1;
    }
  }
  return tokens;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> names;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view tok) {
    auto [it, inserted] = ids.try_emplace(std::string(tok), static_cast<NodeId>(names.size()));
    if (inserted) names.emplace_back(tok);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    auto first = view.find_first_not_of(" \t\r\v\f");
    if (first == std::string_view::npos) continue;
    view.remove_prefix(first);
    if (!options.comment_prefix.empty() && view.starts_with(options.comment_prefix)) continue;

    auto tokens = split_tokens(view, options.delimiter);
    if (tokens.size() < 2) throw ParseError(line_no, "expected two node identifiers");
    if (tokens[0].empty() || tokens[1].empty()) throw ParseError(line_no, "empty node identifier");
    NodeId u = intern(tokens[0]);
    NodeId v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }

  LoadedGraph out;
  out.graph = Graph::from_edges(names.size(), edges, &out.self_loops, &out.duplicate_edges)
                  .with_labels(std::move(names));
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_edge_list(in, options);
}

LoadedGraph load_edge_list_string(const std::string& text, const LoadOptions& options) {
  std::istringstream in(text);
  return load_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::vector<std::size_t> bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.node_count()) throw ArgumentError("bfs source out of range");
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.node_count(), unreached);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == unreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Graph ego_subgraph(const Graph& g, NodeId seed, std::size_t radius) {
  if (seed >= g.node_count()) {
    throw ArgumentError("seed node " + std::to_string(seed) + " out of range (n=" +
                        std::to_string(g.node_count()) + ")");
  }
  std::vector<std::size_t> dist(g.node_count(), std::numeric_limits<std::size_t>::max());
  std::vector<NodeId> order{seed};
  dist[seed] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    NodeId u = order[head];
    if (dist[u] == radius) continue;
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == std::numeric_limits<std::size_t>::max()) {
        dist[v] = dist[u] + 1;
        order.push_back(v);
      }
    }
  }
  return g.induced_subgraph(order);
}

Components connected_components(const Graph& g) {
  constexpr NodeId unset = std::numeric_limits<NodeId>::max();
  Components c;
  c.component_of.assign(g.node_count(), unset);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (c.component_of[s] != unset) continue;
    NodeId id = static_cast<NodeId>(c.count++);
    c.component_of[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (c.component_of[v] == unset) {
          c.component_of[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  return c;
}

namespace {

// Two-colours every component; returns per-component success and fills `color`.
std::vector<bool> two_color(const Graph& g, const Components& comps, std::vector<std::uint8_t>& color) {
  constexpr std::uint8_t unset = 2;
  color.assign(g.node_count(), unset);
  std::vector<bool> ok(comps.count, true);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (color[s] != unset) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (color[v] == unset) {
          color[v] = static_cast<std::uint8_t>(1 - color[u]);
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          ok[comps.component_of[u]] = false;
        }
      }
    }
  }
  return ok;
}

}  // namespace

Bipartition is_bipartite(const Graph& g) {
  auto comps = connected_components(g);
  std::vector<std::uint8_t> color;
  auto ok = two_color(g, comps, color);
  Bipartition b;
  b.bipartite = std::all_of(ok.begin(), ok.end(), [](bool x) { return x; });
  if (b.bipartite) b.coloring = std::move(color);
  return b;
}

std::vector<bool> component_bipartite(const Graph& g, const Components& components) {
  std::vector<std::uint8_t> color;
  return two_color(g, components, color);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = g.degree(v);
  return d;
}

}  // namespace netgame
