#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "dompack/families.hpp"
#include "dompack/graph.hpp"

namespace dompack {

/// True iff the neighbors of v inside `within` are pairwise adjacent.
inline bool is_simplicial(const Graph& g, Vertex v, const VertexSet& within) {
  auto nb = (g.neighbors(v) & within).members();
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) return false;
  return true;
}

/// Perfect elimination order by repeatedly removing the smallest simplicial vertex.
inline std::optional<std::vector<Vertex>> recognize_chordal(const Graph& g) {
  VertexSet alive = g.all_vertices();
  std::vector<Vertex> order;
  while (!alive.empty()) {
    Vertex pick = -1;
    for (Vertex v : alive.members())
      if (is_simplicial(g, v, alive)) {
        pick = v;
        break;
      }
    if (pick < 0) return std::nullopt;
    order.push_back(pick);
    alive.erase(pick);
  }
  return order;
}

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

/// Degree-sequence test: with degrees sorted d_1 >= ... >= d_n and
/// m = max{i : d_i >= i-1}, g is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
inline std::optional<SplitPartition> recognize_split(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> by_deg(n);
  for (Vertex v = 0; v < n; ++v) by_deg[v] = v;
  std::stable_sort(by_deg.begin(), by_deg.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (g.degree(by_deg[i - 1]) >= i - 1) m = i;
  long long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(by_deg[i]);
  if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;
  SplitPartition part{VertexSet(n), VertexSet(n)};
  for (int i = 0; i < n; ++i) (i < m ? part.clique : part.independent).insert(by_deg[i]);
  return part;
}

/// Exhaustive asteroidal-triple test using the components of G - N[z] for every z.
inline bool recognize_at_free(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (Vertex z = 0; z < n; ++z) {
    VertexSet removed = g.closed_neighbors(z);
    int label = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (removed.contains(s) || comp[z][s] >= 0) continue;
      std::vector<Vertex> stack{s};
      comp[z][s] = label;
      while (!stack.empty()) {
        Vertex a = stack.back();
        stack.pop_back();
        for (Vertex b : g.neighbors(a).members())
          if (!removed.contains(b) && comp[z][b] < 0) {
            comp[z][b] = label;
            stack.push_back(b);
          }
      }
      ++label;
    }
  }
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (comp[a][b] == comp[a][c] && comp[b][a] == comp[b][c] && comp[c][a] == comp[c][b]) return false;
      }
    }
  return true;
}

/// Pendant and twin pruning (isolated vertices too) down to at most one vertex.
inline bool recognize_distance_hereditary(const Graph& g) {
  VertexSet alive = g.all_vertices();
  auto nb = [&](Vertex v) { return g.neighbors(v) & alive; };
  for (;;) {
    auto members = alive.members();
    if (members.size() <= 1) return true;
    Vertex drop = -1;
    for (Vertex v : members)
      if (nb(v).size() <= 1) {
        drop = v;
        break;
      }
    for (std::size_t i = 0; drop < 0 && i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        Vertex u = members[i], v = members[j];
        VertexSet nu = nb(u), nv = nb(v);
        nu.erase(v);
        nv.erase(u);
        if (nu == nv) {
          drop = u;
          break;
        }
      }
    if (drop < 0) return false;
    alive.erase(drop);
  }
}

/// Checks that the encoding is a bipartition with consecutive neighborhoods.
inline bool is_convex_order(const Graph& g, const ConvexEncoding& enc) {
  const int n = g.order();
  VertexSet xs(n), ys(n);
  for (Vertex x : enc.x_order) {
    if (!g.has_vertex(x) || xs.contains(x)) return false;
    xs.insert(x);
  }
  for (const auto& [y, iv] : enc.intervals) {
    if (!g.has_vertex(y) || xs.contains(y)) return false;
    ys.insert(y);
  }
  if ((xs | ys) != g.all_vertices()) return false;
  const int nx = static_cast<int>(enc.x_order.size());
  for (const auto& [y, iv] : enc.intervals) {
    auto [lo, hi] = iv;
    if (lo < 0 || hi >= nx || lo > hi) return false;
    VertexSet expect(n);
    for (int p = lo; p <= hi; ++p) expect.insert(enc.x_order[p]);
    if (g.neighbors(y) != expect) return false;
  }
  for (Vertex x : enc.x_order)
    if (g.neighbors(x).intersects(xs)) return false;
  return true;
}

}  // namespace dompack
