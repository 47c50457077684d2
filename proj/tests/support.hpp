#pragma once

// Naive reference oracles for tests. They read the definitions directly off
// the adjacency relation and share no code with the library's checkers or solvers.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "dompack/graph.hpp"

namespace ref {

using dompack::DominationMode;
using dompack::EdgeColor;
using dompack::Graph;
using dompack::Vertex;

inline bool bit(std::uint32_t m, int v) { return (m >> v) & 1u; }

inline std::uint32_t mask_of(const dompack::VertexSet& s) {
  std::uint32_t m = 0;
  for (int v = 0; v < s.universe(); ++v)
    if (s.contains(v)) m |= 1u << v;
  return m;
}

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v)) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

inline bool dominates(const Graph& g, DominationMode mode, std::uint32_t x, std::uint32_t y, std::uint32_t d) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    bool has_nb = false, has_black = false, nb_in_d = false, black_in_d = false, nb_in_dx = false;
    for (int w = 0; w < n; ++w) {
      if (!g.adjacent(v, w)) continue;
      const bool black = g.color(v, w) == EdgeColor::Black;
      has_nb = true;
      has_black = has_black || black;
      nb_in_d = nb_in_d || bit(d, w);
      black_in_d = black_in_d || (black && bit(d, w));
      nb_in_dx = nb_in_dx || bit(d | x, w);
    }
    const bool closed = bit(d | x, v) || nb_in_dx;
    switch (mode) {
      case DominationMode::Plain:
        if (!bit(y, v) && !closed) return false;
        break;
      case DominationMode::Total:
        if (bit(x, v) || bit(y, v)) break;
        if (has_nb ? !nb_in_d : !bit(d, v)) return false;
        break;
      case DominationMode::Black:
        if (bit(y, v)) break;
        if (has_black ? !black_in_d : !closed) return false;
        break;
    }
  }
  return true;
}

inline bool is_packing(const Graph& g, std::uint32_t x, std::uint32_t y, std::uint32_t p) {
  const int n = g.order();
  auto d = distances(g);
  for (int u = 0; u < n; ++u) {
    if (!bit(p, u)) continue;
    if (bit(y, u)) return false;
    for (int a = 0; a < n; ++a)
      if (bit(x, a) && d[a][u] >= 0 && d[a][u] <= 1) return false;
    for (int v = u + 1; v < n; ++v)
      if (bit(p, v) && d[u][v] >= 0 && d[u][v] < 3) return false;
  }
  return true;
}

inline int gamma(const Graph& g, DominationMode mode = DominationMode::Plain, std::uint32_t x = 0,
                 std::uint32_t y = 0) {
  const int n = g.order();
  int best = n + 1;
  for (std::uint32_t d = 0; d < (1u << n); ++d)
    if (std::popcount(d) < best && dominates(g, mode, x, y, d)) best = std::popcount(d);
  return best;
}

inline int rho(const Graph& g, std::uint32_t x = 0, std::uint32_t y = 0) {
  const int n = g.order();
  auto dist = distances(g);
  int best = 0;
  for (std::uint32_t p = 0; p < (1u << n); ++p) {
    if (std::popcount(p) <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!bit(p, u)) continue;
      if (bit(y, u)) ok = false;
      for (int a = 0; a < n && ok; ++a)
        if (bit(x, a) && dist[a][u] >= 0 && dist[a][u] <= 1) ok = false;
      for (int v = u + 1; v < n && ok; ++v)
        if (bit(p, v) && dist[u][v] >= 0 && dist[u][v] < 3) ok = false;
    }
    if (ok) best = std::popcount(p);
  }
  return best;
}

/// Smallest k such that every subgraph has a vertex of degree <= k, by checking all vertex subsets.
inline int degeneracy(const Graph& g) {
  const int n = g.order();
  int worst = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int min_deg = n;
    for (int v = 0; v < n; ++v) {
      if (!bit(s, v)) continue;
      int deg = 0;
      for (int w = 0; w < n; ++w) deg += bit(s, w) && g.adjacent(v, w);
      min_deg = std::min(min_deg, deg);
    }
    worst = std::max(worst, min_deg);
  }
  return worst;
}

inline Graph induced(const Graph& g, std::uint32_t s, std::vector<Vertex>* ids = nullptr) {
  std::vector<Vertex> map(g.order(), -1), back;
  for (int v = 0; v < g.order(); ++v)
    if (bit(s, v)) {
      map[v] = static_cast<Vertex>(back.size());
      back.push_back(v);
    }
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u : back)
    for (Vertex v : back)
      if (u < v && g.adjacent(u, v)) e.emplace_back(map[u], map[v]);
  if (ids) *ids = back;
  return Graph::from_edges(static_cast<int>(back.size()), e);
}

inline bool connected(const Graph& g) {
  auto d = distances(g);
  for (int v = 0; v < g.order(); ++v)
    if (d[0][v] < 0) return false;
  return true;
}

/// Three pairwise non-adjacent vertices, each pair joined by a path avoiding the third's closed neighborhood.
inline bool is_at_free(const Graph& g) {
  const int n = g.order();
  auto joined_avoiding = [&](int a, int b, int z) {
    std::uint32_t keep = 0;
    for (int v = 0; v < n; ++v)
      if (v != z && !g.adjacent(v, z)) keep |= 1u << v;
    std::vector<Vertex> ids;
    Graph h = induced(g, keep, &ids);
    auto d = distances(h);
    int ia = static_cast<int>(std::find(ids.begin(), ids.end(), a) - ids.begin());
    int ib = static_cast<int>(std::find(ids.begin(), ids.end(), b) - ids.begin());
    return d[ia][ib] >= 0;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (joined_avoiding(a, b, c) && joined_avoiding(a, c, b) && joined_avoiding(b, c, a)) return false;
      }
  return true;
}

/// Every connected induced subgraph keeps the distances of the whole graph.
inline bool is_distance_hereditary(const Graph& g) {
  const int n = g.order();
  auto dg = distances(g);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::vector<Vertex> ids;
    Graph h = induced(g, s, &ids);
    if (!connected(h)) continue;
    auto dh = distances(h);
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (dh[i][j] != dg[ids[i]][ids[j]]) return false;
  }
  return true;
}

/// No induced cycle of length four or more.
inline bool is_chordal(const Graph& g) {
  const int n = g.order();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (std::popcount(s) < 4) continue;
    Graph h = induced(g, s);
    bool cycle = connected(h);
    for (int v = 0; v < h.order() && cycle; ++v) cycle = h.degree(v) == 2;
    if (cycle) return false;
  }
  return true;
}

inline int clique_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (std::popcount(s) <= best) continue;
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      for (int v = u + 1; v < n && clique; ++v)
        if (bit(s, u) && bit(s, v) && !g.adjacent(u, v)) clique = false;
    if (clique) best = std::popcount(s);
  }
  return best;
}

/// Replays merges (u, v) -> w on a trigraph; returns the largest red degree seen, or -1 if a merge is malformed
/// or more than one vertex is left at the end.
inline int replay_width(const Graph& g, const std::vector<std::array<Vertex, 3>>& merges) {
  // edge color per pair: false black, true red
  std::map<Vertex, std::map<Vertex, bool>> adj;
  for (Vertex v = 0; v < g.order(); ++v) adj[v];
  for (const auto& e : g.edges()) {
    adj[e.u][e.v] = e.color == EdgeColor::Red;
    adj[e.v][e.u] = e.color == EdgeColor::Red;
  }
  auto width = [&] {
    int w = 0;
    for (const auto& [v, nb] : adj) {
      int red = 0;
      for (const auto& [x, r] : nb) red += r;
      w = std::max(w, red);
    }
    return w;
  };
  int worst = width();
  for (const auto& [u, v, w] : merges) {
    if (u == v || !adj.count(u) || !adj.count(v) || adj.count(w)) return -1;
    std::map<Vertex, bool> merged;
    std::set<Vertex> others;
    for (const auto& [x, r] : adj[u]) others.insert(x);
    for (const auto& [x, r] : adj[v]) others.insert(x);
    others.erase(u);
    others.erase(v);
    for (Vertex x : others) {
      auto iu = adj[u].find(x), iv = adj[v].find(x);
      bool black_both = iu != adj[u].end() && iv != adj[v].end() && !iu->second && !iv->second;
      merged[x] = !black_both;
    }
    for (Vertex x : others) {
      adj[x].erase(u);
      adj[x].erase(v);
      adj[x][w] = merged[x];
    }
    adj.erase(u);
    adj.erase(v);
    adj[w] = merged;
    worst = std::max(worst, width());
  }
  return adj.size() <= 1 ? worst : -1;
}

}  // namespace ref
