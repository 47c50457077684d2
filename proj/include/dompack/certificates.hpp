#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dompack/graph.hpp"
#include "dompack/recognizers.hpp"

namespace dompack {

// ---------------------------------------------------------------------------
// Treewidth certificates: chordal supergraphs with small cliques

inline std::optional<std::string> tw_certificate_error(const Graph& g, const Graph& completion, int k) {
  if (completion.order() != g.order()) return "completion has a different vertex count";
  for (const auto& e : g.edges())
    if (!completion.adjacent(e.u, e.v))
      return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " missing from completion";
  auto peo = recognize_chordal(completion);
  if (!peo) return "completion is not chordal";
  VertexSet later = completion.all_vertices();
  for (Vertex v : *peo) {
    later.erase(v);
    int clique = (completion.neighbors(v) & later).size() + 1;
    if (clique > k + 1) return "clique of size " + std::to_string(clique) + " exceeds k+1 = " + std::to_string(k + 1);
  }
  return std::nullopt;
}

inline bool validate_tw_certificate(const Graph& g, const Graph& completion, int k) {
  return !tw_certificate_error(g, completion, k);
}

/// Exhaustive elimination-order search with memoized dead ends; n <= 10.
inline std::optional<Graph> brute_force_tw_certificate(const Graph& g, int k) {
  const int n = g.order();
  if (n > 10) throw Error(ErrorKind::Oversize, "treewidth search limited to 10 vertices");
  const std::uint32_t all = (1u << n) - 1;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  // Neighbors of v once the set `gone` has been eliminated: vertices reachable through gone.
  auto filled = [&](Vertex v, std::uint32_t gone) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, reach = 0;
    while (frontier) {
      Vertex a = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t nb = adj[a] & ~seen;
      seen |= nb;
      reach |= nb & ~gone;
      frontier |= nb & gone;
    }
    return reach;
  };
  std::vector<char> dead(std::size_t{1} << n, 0);
  std::vector<Vertex> order;
  auto search = [&](auto&& self, std::uint32_t gone) -> bool {
    if (gone == all) return true;
    if (dead[gone]) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (gone >> v & 1u) continue;
      if (std::popcount(filled(v, gone)) > k) continue;
      order.push_back(v);
      if (self(self, gone | 1u << v)) return true;
      order.pop_back();
    }
    dead[gone] = 1;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint32_t gone = 0;
  for (Vertex v : order) {
    std::uint32_t nb = filled(v, gone);
    for (Vertex w = 0; w < n; ++w)
      if (nb >> w & 1u) edges.emplace_back(v, w);
    gone |= 1u << v;
  }
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Trigraphs and contraction sequences

struct Merge {
  Vertex u;
  Vertex v;
  Vertex w;
};

struct ContractionSequence {
  std::vector<Merge> merges;
  int declared_width = 0;
};

using ColoredNeighbors = std::map<Vertex, EdgeColor>;

/// Neighborhood of the vertex replacing u and v: black to x iff x was black to both.
inline ColoredNeighbors merged_neighbors(const ColoredNeighbors& nu, const ColoredNeighbors& nv, Vertex u,
                                         Vertex v) {
  ColoredNeighbors out;
  for (const auto* side : {&nu, &nv})
    for (const auto& [x, c] : *side) {
      if (x == u || x == v) continue;
      auto iu = nu.find(x), iv = nv.find(x);
      bool black = iu != nu.end() && iv != nv.end() && iu->second == EdgeColor::Black &&
                   iv->second == EdgeColor::Black;
      out[x] = black ? EdgeColor::Black : EdgeColor::Red;
    }
  return out;
}

/// Red/black graph on arbitrary integer ids, mutated by contractions.
class Trigraph {
 public:
  explicit Trigraph(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) adj_[v];
    for (const auto& e : g.edges()) {
      adj_[e.u][e.v] = e.color;
      adj_[e.v][e.u] = e.color;
    }
  }

  bool has(Vertex v) const { return adj_.count(v) > 0; }
  int order() const { return static_cast<int>(adj_.size()); }

  int red_degree(Vertex v) const {
    int r = 0;
    for (const auto& [x, c] : adj_.at(v)) r += c == EdgeColor::Red;
    return r;
  }

  int max_red_degree() const {
    int r = 0;
    for (const auto& [v, nb] : adj_) r = std::max(r, red_degree(v));
    return r;
  }

  void contract(Vertex u, Vertex v, Vertex w) {
    ColoredNeighbors merged = merged_neighbors(adj_.at(u), adj_.at(v), u, v);
    for (Vertex side : {u, v}) {
      for (const auto& [x, c] : adj_.at(side))
        if (x != u && x != v) adj_[x].erase(side);
      adj_.erase(side);
    }
    for (const auto& [x, c] : merged) adj_[x][w] = c;
    adj_[w] = std::move(merged);
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (const auto& [v, nb] : adj_) out.push_back(v);
    return out;
  }

 private:
  std::map<Vertex, ColoredNeighbors> adj_;
};

inline std::optional<std::string> contraction_sequence_error(const Graph& g, const ContractionSequence& seq) {
  Trigraph t(g);
  if (t.max_red_degree() > seq.declared_width) return "input red degree exceeds declared width";
  std::set<Vertex> used;
  for (Vertex v = 0; v < g.order(); ++v) used.insert(v);
  for (std::size_t i = 0; i < seq.merges.size(); ++i) {
    const auto& m = seq.merges[i];
    const std::string at = "merge " + std::to_string(i) + ": ";
    if (m.u == m.v) return at + "merges a vertex with itself";
    if (!t.has(m.u) || !t.has(m.v)) return at + "vertex not present";
    if (used.count(m.w)) return at + "merged id " + std::to_string(m.w) + " is not fresh";
    used.insert(m.w);
    t.contract(m.u, m.v, m.w);
    if (int r = t.max_red_degree(); r > seq.declared_width)
      return at + "red degree " + std::to_string(r) + " exceeds declared width " +
             std::to_string(seq.declared_width);
  }
  if (g.order() > 0 && t.order() != 1)
    return "sequence ends with " + std::to_string(t.order()) + " vertices instead of 1";
  return std::nullopt;
}

inline bool validate_contraction_sequence(const Graph& g, const ContractionSequence& seq) {
  return !contraction_sequence_error(g, seq);
}

namespace detail {

/// Parts of a vertex partition (bitmasks) as a trigraph: a pair of parts is
/// black iff every cross pair is a black edge, absent iff none is adjacent.
struct PartitionState {
  std::vector<std::uint32_t> parts;

  static int red_degree_max(const std::vector<std::uint32_t>& parts, const std::vector<std::uint32_t>& black,
                            const std::vector<std::uint32_t>& any) {
    int worst = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int red = 0;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (i == j) continue;
        bool touches = false, all_black = true;
        for (std::uint32_t a = parts[i]; a; a &= a - 1) {
          int x = std::countr_zero(a);
          if (any[x] & parts[j]) touches = true;
          if ((black[x] & parts[j]) != parts[j]) all_black = false;
        }
        if (touches && !all_black) ++red;
      }
      worst = std::max(worst, red);
    }
    return worst;
  }
};

}  // namespace detail

/// Exhaustive search over partitions for a sequence of width <= k; n <= 8.
inline std::optional<ContractionSequence> brute_force_tww_sequence(const Graph& g, int k) {
  const int n = g.order();
  if (n > 8) throw Error(ErrorKind::Oversize, "twin-width search limited to 8 vertices");
  std::vector<std::uint32_t> black(n, 0), any(n, 0);
  for (const auto& e : g.edges()) {
    any[e.u] |= 1u << e.v;
    any[e.v] |= 1u << e.u;
    if (e.color == EdgeColor::Black) {
      black[e.u] |= 1u << e.v;
      black[e.v] |= 1u << e.u;
    }
  }
  std::vector<std::uint32_t> start;
  for (Vertex v = 0; v < n; ++v) start.push_back(1u << v);
  if (detail::PartitionState::red_degree_max(start, black, any) > k) return std::nullopt;

  std::set<std::vector<std::uint32_t>> dead;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> steps;
  auto search = [&](auto&& self, std::vector<std::uint32_t> parts) -> bool {
    if (parts.size() <= 1) return true;
    std::sort(parts.begin(), parts.end());
    if (dead.count(parts)) return false;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        std::vector<std::uint32_t> next;
        for (std::size_t t = 0; t < parts.size(); ++t)
          if (t != i && t != j) next.push_back(parts[t]);
        next.push_back(parts[i] | parts[j]);
        if (detail::PartitionState::red_degree_max(next, black, any) > k) continue;
        steps.emplace_back(parts[i], parts[j]);
        if (self(self, next)) return true;
        steps.pop_back();
      }
    dead.insert(parts);
    return false;
  };
  if (!search(search, start)) return std::nullopt;

  // Translate part masks into vertex ids: singletons keep their id, merges get n, n+1, ...
  ContractionSequence seq;
  seq.declared_width = k;
  std::map<std::uint32_t, Vertex> id;
  for (Vertex v = 0; v < n; ++v) id[1u << v] = v;
  Vertex fresh = n;
  for (auto [pa, pb] : steps) {
    seq.merges.push_back({id.at(pa), id.at(pb), fresh});
    id[pa | pb] = fresh++;
  }
  return seq;
}

/// Repeatedly merges the pair giving the smallest maximum red degree (ties by
/// smallest ids). Returns the sequence and the width it reached.
inline ContractionSequence greedy_contraction_sequence(const Graph& g) {
  Trigraph t(g);
  ContractionSequence seq;
  seq.declared_width = t.max_red_degree();
  Vertex fresh = g.order();
  while (t.order() > 1) {
    auto vs = t.vertices();
    int best = -1;
    std::pair<Vertex, Vertex> pick{};
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        Trigraph trial = t;
        trial.contract(vs[i], vs[j], fresh);
        int r = trial.max_red_degree();
        if (best < 0 || r < best) {
          best = r;
          pick = {vs[i], vs[j]};
        }
      }
    t.contract(pick.first, pick.second, fresh);
    seq.merges.push_back({pick.first, pick.second, fresh++});
    seq.declared_width = std::max(seq.declared_width, best);
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Rotation systems

/// Per-vertex cyclic order of neighbors.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;
};

/// Face tracing; every component must satisfy V - E + F = 2 (an isolated vertex has one face).
inline std::optional<std::string> rotation_planarity_error(const Graph& g, const RotationSystem& rs) {
  const int n = g.order();
  if (static_cast<int>(rs.order.size()) != n) return "rotation system has the wrong number of vertices";
  std::vector<std::map<Vertex, std::size_t>> pos(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& cyc = rs.order[v];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (!g.adjacent(v, cyc[i]) || pos[v].count(cyc[i]))
        return "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors";
      pos[v][cyc[i]] = i;
    }
    if (static_cast<int>(cyc.size()) != g.degree(v))
      return "rotation at vertex " + std::to_string(v) + " misses neighbors";
  }
  std::set<std::pair<Vertex, Vertex>> visited;
  std::vector<int> comp_of(n, -1);
  auto comps = components(g);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c].members()) comp_of[v] = static_cast<int>(c);
  std::vector<int> faces(comps.size(), 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : rs.order[u]) {
      if (visited.count({u, v})) continue;
      ++faces[comp_of[u]];
      Vertex a = u, b = v;
      while (!visited.count({a, b})) {
        visited.insert({a, b});
        const auto& cyc = rs.order[b];
        Vertex next = cyc[(pos[b][a] + 1) % cyc.size()];
        a = b;
        b = next;
      }
    }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    int vc = comps[c].size(), ec = 0;
    for (Vertex v : comps[c].members()) ec += g.degree(v);
    ec /= 2;
    int fc = ec == 0 ? 1 : faces[c];
    if (vc - ec + fc != 2) return "Euler characteristic " + std::to_string(vc - ec + fc) + " in a component";
  }
  return std::nullopt;
}

inline bool validate_rotation_planarity(const Graph& g, const RotationSystem& rs) {
  return !rotation_planarity_error(g, rs);
}

}  // namespace dompack
