#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dompack/error.hpp"

namespace dompack {

using Vertex = int;

/// Dynamic bitset over the vertex ids 0..universe-1 of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  template <typename Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<Vertex> members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }

  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int size() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Low 64 bits; only meaningful when universe <= 64.
  std::uint64_t word0() const noexcept { return words_.empty() ? 0 : words_[0]; }

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= universe_)
      throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " outside universe of size " +
                                                  std::to_string(universe_));
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw Error(ErrorKind::InvalidArgument, "vertex sets over different universes");
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class EdgeColor { Black, Red };

struct Edge {
  Vertex u;
  Vertex v;
  EdgeColor color = EdgeColor::Black;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Simple undirected graph with an optional red/black edge coloring.
/// Values are immutable; the mutators return new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n, VertexSet(n)), red_(n, VertexSet(n)) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
  }

  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.link(u, v, EdgeColor::Black);
    return g;
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& e : edges) g.link(e.u, e.v, e.color);
    return g;
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }

  int size() const {
    int m = 0;
    for (const auto& a : adj_) m += a.size();
    return m / 2;
  }

  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < order(); }

  bool adjacent(Vertex u, Vertex v) const { return has_vertex(u) && adj_[u].contains(v); }

  EdgeColor color(Vertex u, Vertex v) const {
    require_edge(u, v);
    return red_[u].contains(v) ? EdgeColor::Red : EdgeColor::Black;
  }

  bool has_red_edges() const {
    return std::any_of(red_.begin(), red_.end(), [](const VertexSet& s) { return !s.empty(); });
  }

  const VertexSet& neighbors(Vertex v) const {
    require_vertex(v);
    return adj_[v];
  }

  const VertexSet& red_neighbors(Vertex v) const {
    require_vertex(v);
    return red_[v];
  }

  VertexSet black_neighbors(Vertex v) const { return neighbors(v) - red_neighbors(v); }

  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }

  int degree(Vertex v) const { return neighbors(v).size(); }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u].members())
        if (u < v) out.push_back({u, v, red_[u].contains(v) ? EdgeColor::Red : EdgeColor::Black});
    return out;
  }

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != order())
      throw Error(ErrorKind::InvalidArgument, "label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  Graph add_edge(Vertex u, Vertex v, EdgeColor c = EdgeColor::Black) const {
    Graph g = *this;
    g.link(u, v, c);
    return g;
  }

  Graph delete_edge(Vertex u, Vertex v) const {
    require_edge(u, v);
    Graph g = *this;
    g.adj_[u].erase(v);
    g.adj_[v].erase(u);
    g.red_[u].erase(v);
    g.red_[v].erase(u);
    return g;
  }

  /// Returns the extended graph and the id of the fresh vertex (always order()).
  std::pair<Graph, Vertex> add_vertex() const {
    Graph g(order() + 1);
    for (const auto& e : edges()) g.link(e.u, e.v, e.color);
    if (!labels_.empty()) {
      g.labels_ = labels_;
      g.labels_.push_back(std::to_string(order()));
    }
    return {g, order()};
  }

  Graph delete_vertex(Vertex v) const {
    require_vertex(v);
    return induced(all_vertices() - VertexSet::of(order(), {v}));
  }

  /// Induced subgraph; vertices are renumbered in increasing id order.
  Graph induced(const VertexSet& keep) const { return induced_with_map(keep).first; }

  /// Induced subgraph together with new-id -> old-id translation.
  std::pair<Graph, std::vector<Vertex>> induced_with_map(const VertexSet& keep) const {
    if (keep.universe() != order()) throw Error(ErrorKind::InvalidArgument, "vertex set from another graph");
    auto old_ids = keep.members();
    std::vector<Vertex> new_id(order(), -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<Vertex>(i);
    Graph g(static_cast<int>(old_ids.size()));
    for (const auto& e : edges())
      if (new_id[e.u] >= 0 && new_id[e.v] >= 0) g.link(new_id[e.u], new_id[e.v], e.color);
    if (!labels_.empty())
      for (auto v : old_ids) g.labels_.push_back(labels_[v]);
    return {g, old_ids};
  }

  /// Same graph with every edge black.
  Graph uncolored() const {
    Graph g = *this;
    for (auto& r : g.red_) r = VertexSet(order());
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_ && a.red_ == b.red_; }

 private:
  void link(Vertex u, Vertex v, EdgeColor c) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw Error(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
    if (c == EdgeColor::Red) {
      red_[u].insert(v);
      red_[v].insert(u);
    } else {
      red_[u].erase(v);
      red_[v].erase(u);
    }
  }

  void require_vertex(Vertex v) const {
    if (!has_vertex(v)) throw Error(ErrorKind::InvalidArgument, "invalid vertex id " + std::to_string(v));
  }
  void require_edge(Vertex u, Vertex v) const {
    if (!adjacent(u, v))
      throw Error(ErrorKind::InvalidArgument, "no edge " + std::to_string(u) + "-" + std::to_string(v));
  }

  std::vector<VertexSet> adj_;
  std::vector<VertexSet> red_;
  std::vector<std::string> labels_;
};

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex v : s.members()) out |= g.neighbors(v);
  return out;
}

inline VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  for (Vertex v : s.members()) out |= g.neighbors(v);
  return out;
}

/// BFS distances from `source`; kUnreachable for other components.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u).members())
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

inline int distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw Error(ErrorKind::InvalidArgument, "invalid vertex");
  return bfs_distances(g, u)[v];
}

/// Shortest u-v path as a vertex sequence, or empty when disconnected.
inline std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> parent(g.order(), -1);
  std::vector<bool> seen(g.order(), false);
  std::deque<Vertex> queue{u};
  seen.at(u) = true;
  while (!queue.empty()) {
    Vertex a = queue.front();
    queue.pop_front();
    if (a == v) break;
    for (Vertex b : g.neighbors(a).members())
      if (!seen[b]) {
        seen[b] = true;
        parent[b] = a;
        queue.push_back(b);
      }
  }
  if (!seen.at(v)) return {};
  std::vector<Vertex> path;
  for (Vertex x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

struct DegeneracyResult {
  std::vector<Vertex> ordering;
  int degeneracy = 0;
};

/// Repeatedly removes a minimum-degree vertex (smallest id on ties).
inline DegeneracyResult degeneracy_ordering(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  DegeneracyResult result;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    result.degeneracy = std::max(result.degeneracy, deg[best]);
    result.ordering.push_back(best);
    removed[best] = true;
    for (Vertex w : g.neighbors(best).members())
      if (!removed[w]) --deg[w];
  }
  return result;
}

inline int degeneracy(const Graph& g) { return degeneracy_ordering(g).degeneracy; }

/// Conflict graph of packings: uv is an edge iff 1 <= dist(u,v) <= 2.
inline Graph power2_conflict_graph(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexSet reach = closed_neighborhood(g, g.closed_neighbors(u));
    for (Vertex v : reach.members())
      if (u < v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(g.order(), edges);
}

inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.order());
    auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < g.order(); ++v)
      if (dist[v] != kUnreachable) comp.insert(v);
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

enum class DominationMode { Plain, Total, Black };

inline std::string_view to_string(DominationMode m) {
  switch (m) {
    case DominationMode::Plain: return "plain";
    case DominationMode::Total: return "total";
    case DominationMode::Black: return "black";
  }
  return "plain";
}

inline DominationMode parse_mode(std::string_view s) {
  if (s == "plain") return DominationMode::Plain;
  if (s == "total") return DominationMode::Total;
  if (s == "black") return DominationMode::Black;
  throw Error(ErrorKind::Parse, "unknown domination mode '" + std::string(s) + "'");
}

/// A graph with pre-dominating set X, pre-dominated set Y and a domination mode.
struct XYInstance {
  Graph graph;
  VertexSet x_set;
  VertexSet y_set;
  DominationMode mode = DominationMode::Plain;

  static XYInstance plain(Graph g) {
    int n = g.order();
    return {std::move(g), VertexSet(n), VertexSet(n), DominationMode::Plain};
  }

  static XYInstance make(Graph g, VertexSet x, VertexSet y, DominationMode mode = DominationMode::Plain) {
    XYInstance inst{std::move(g), std::move(x), std::move(y), mode};
    inst.validate();
    return inst;
  }

  void validate() const {
    if (x_set.universe() != graph.order() || y_set.universe() != graph.order())
      throw Error(ErrorKind::InvalidArgument, "X/Y sets do not match the graph");
    if (mode != DominationMode::Black && graph.has_red_edges())
      throw Error(ErrorKind::InvalidArgument, "red edges are only meaningful in black mode");
  }
};

}  // namespace dompack
