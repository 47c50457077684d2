#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <cstdlib>
#include <tuple>
#include <string>
#include <vector>

#include "dompack/graph.hpp"

namespace dompack {

// ---------------------------------------------------------------------------
// Checkers

inline bool check_xy_dominating(const XYInstance& inst, const VertexSet& d) {
  const Graph& g = inst.graph;
  if (d.universe() != g.order()) return false;
  VertexSet covered = closed_neighborhood(g, d | inst.x_set) | inst.y_set;
  if (covered != g.all_vertices()) return false;
  for (Vertex z = 0; z < g.order(); ++z) {
    switch (inst.mode) {
      case DominationMode::Plain:
        break;
      case DominationMode::Total:
        // Every vertex outside X and Y with a neighbor needs a neighbor in D.
        if (!inst.x_set.contains(z) && !inst.y_set.contains(z) && g.degree(z) > 0 &&
            !g.neighbors(z).intersects(d))
          return false;
        break;
      case DominationMode::Black: {
        VertexSet black = g.black_neighbors(z);
        if (!inst.y_set.contains(z) && !black.empty() && !black.intersects(d)) return false;
        break;
      }
    }
  }
  return true;
}

inline bool check_xy_packing(const XYInstance& inst, const VertexSet& p) {
  const Graph& g = inst.graph;
  if (p.universe() != g.order()) return false;
  if (p.intersects(inst.y_set)) return false;
  if (p.intersects(closed_neighborhood(g, inst.x_set))) return false;
  VertexSet claimed(g.order());
  for (Vertex v : p.members()) {
    VertexSet ball = g.closed_neighbors(v);
    if (ball.intersects(claimed)) return false;
    claimed |= ball;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exact solvers

struct ExactResult {
  int value = 0;
  VertexSet witness;
  long long nodes_explored = 0;
};

struct SolveOptions {
  int max_n = 64;

  /// Default guardrail, overridable through DOMPACK_MAX_N.
  static SolveOptions from_env() {
    SolveOptions o;
    if (const char* env = std::getenv("DOMPACK_MAX_N")) {
      try {
        o.max_n = std::stoi(env);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidArgument, "DOMPACK_MAX_N is not an integer");
      }
    }
    return o;
  }
};

namespace detail {

inline constexpr int kWideBits = 512;
using WideMask = std::bitset<kWideBits>;

inline int popcount(std::uint64_t m) { return std::popcount(m); }
inline int popcount(const WideMask& m) { return static_cast<int>(m.count()); }
inline bool any(std::uint64_t m) { return m != 0; }
inline bool any(const WideMask& m) { return m.any(); }
inline bool test(std::uint64_t m, int i) { return (m >> i) & 1u; }
inline bool test(const WideMask& m, int i) { return m.test(i); }
inline void set(std::uint64_t& m, int i) { m |= std::uint64_t{1} << i; }
inline void set(WideMask& m, int i) { m.set(i); }

template <typename F>
void for_each_bit(std::uint64_t m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}
template <typename F>
void for_each_bit(const WideMask& m, F&& f) {
  for (std::size_t i = m._Find_first(); i < m.size(); i = m._Find_next(i)) f(static_cast<int>(i));
}

template <typename Mask>
Mask to_mask(const VertexSet& s) {
  Mask m{};
  for (Vertex v : s.members()) set(m, v);
  return m;
}

template <typename Mask>
VertexSet from_mask(const Mask& m, int n) {
  VertexSet s(n);
  for_each_bit(m, [&](int v) { s.insert(v); });
  return s;
}

inline void guard(const Graph& g, const SolveOptions& opts) {
  if (g.order() > opts.max_n)
    throw Error(ErrorKind::Oversize, "instance has " + std::to_string(g.order()) + " vertices, limit is " +
                                         std::to_string(opts.max_n));
  if (g.order() > kWideBits)
    throw Error(ErrorKind::Oversize, "exact solvers support at most " + std::to_string(kWideBits) + " vertices");
}

struct Requirement {
  Vertex vertex;
  int degree;
};

/// Per-vertex hitting requirement: vertex z is satisfied iff D meets options[z].
template <typename Mask>
struct CoverProblem {
  std::vector<Mask> options;
  std::vector<Requirement> who;
};

template <typename Mask>
CoverProblem<Mask> domination_requirements(const XYInstance& inst) {
  const Graph& g = inst.graph;
  VertexSet nx = closed_neighborhood(g, inst.x_set);
  CoverProblem<Mask> prob;
  for (Vertex z = 0; z < g.order(); ++z) {
    if (inst.y_set.contains(z)) continue;
    VertexSet opts(g.order());
    switch (inst.mode) {
      case DominationMode::Plain:
        if (nx.contains(z)) continue;
        opts = g.closed_neighbors(z);
        break;
      case DominationMode::Total:
        if (inst.x_set.contains(z)) continue;
        opts = g.degree(z) > 0 ? g.neighbors(z) : VertexSet::of(g.order(), {z});
        break;
      case DominationMode::Black: {
        VertexSet black = g.black_neighbors(z);
        if (!black.empty()) {
          opts = black;
        } else {
          if (nx.contains(z)) continue;
          opts = g.closed_neighbors(z);
        }
        break;
      }
    }
    if (opts.empty()) throw Error(ErrorKind::Infeasible, "vertex " + std::to_string(z) + " cannot be dominated");
    prob.options.push_back(to_mask<Mask>(opts));
    prob.who.push_back({z, g.degree(z)});
  }
  return prob;
}

template <typename Mask>
class DominationSearch {
 public:
  DominationSearch(CoverProblem<Mask> prob, int n) : prob_(std::move(prob)), n_(n) {}

  ExactResult run() {
    std::vector<int> open(prob_.options.size());
    for (std::size_t i = 0; i < open.size(); ++i) open[i] = static_cast<int>(i);
    best_ = greedy();
    best_size_ = popcount(best_);
    recurse(open, Mask{}, 0, Mask{});
    return {best_size_, from_mask(best_, n_), nodes_};
  }

 private:
  Mask greedy() const {
    Mask chosen{};
    std::vector<bool> done(prob_.options.size(), false);
    for (;;) {
      std::vector<int> gain(n_, 0);
      bool left = false;
      for (std::size_t i = 0; i < done.size(); ++i)
        if (!done[i]) {
          left = true;
          for_each_bit(prob_.options[i], [&](int v) { ++gain[v]; });
        }
      if (!left) return chosen;
      int pick = static_cast<int>(std::max_element(gain.begin(), gain.end()) - gain.begin());
      set(chosen, pick);
      for (std::size_t i = 0; i < done.size(); ++i)
        if (test(prob_.options[i], pick)) done[i] = true;
    }
  }

  // Requirements with pairwise disjoint option sets each need their own vertex.
  int lower_bound(const std::vector<int>& open, const Mask& forbidden) const {
    std::vector<std::pair<int, int>> order;
    for (int i : open) order.emplace_back(popcount(prob_.options[i] & ~forbidden), i);
    std::sort(order.begin(), order.end());
    Mask used{};
    int lb = 0;
    for (auto [sz, i] : order) {
      Mask avail = prob_.options[i] & ~forbidden;
      if (!any(avail & used)) {
        used |= avail;
        ++lb;
      }
    }
    return lb;
  }

  void recurse(const std::vector<int>& open, const Mask& chosen, int count, Mask forbidden) {
    ++nodes_;
    if (open.empty()) {
      if (count < best_size_) {
        best_size_ = count;
        best_ = chosen;
      }
      return;
    }
    if (count + lower_bound(open, forbidden) >= best_size_) return;

    // Branch on the requirement with fewest remaining options, ties by (degree, id).
    int pick = -1;
    std::tuple<int, int, int> key{};
    for (int i : open) {
      std::tuple<int, int, int> k{popcount(prob_.options[i] & ~forbidden), prob_.who[i].degree, prob_.who[i].vertex};
      if (pick < 0 || k < key) {
        pick = i;
        key = k;
      }
    }
    Mask cands = prob_.options[pick] & ~forbidden;
    if (!any(cands)) return;

    std::vector<std::pair<int, int>> ranked;
    for_each_bit(cands, [&](int v) {
      int hits = 0;
      for (int i : open) hits += test(prob_.options[i], v);
      ranked.emplace_back(-hits, v);
    });
    std::sort(ranked.begin(), ranked.end());
    for (auto [neg, v] : ranked) {
      std::vector<int> rest;
      for (int i : open)
        if (!test(prob_.options[i], v)) rest.push_back(i);
      Mask next = chosen;
      set(next, v);
      recurse(rest, next, count + 1, forbidden);
      set(forbidden, v);
    }
  }

  CoverProblem<Mask> prob_;
  int n_;
  Mask best_{};
  int best_size_ = 0;
  long long nodes_ = 0;
};

template <typename Mask>
class PackingSearch {
 public:
  PackingSearch(std::vector<Mask> conflict, Mask allowed, int n)
      : conflict_(std::move(conflict)), allowed_(allowed), n_(n) {}

  ExactResult run() {
    recurse(allowed_, Mask{}, 0);
    return {best_size_, from_mask(best_, n_), nodes_};
  }

 private:
  // Greedy clique cover of the candidates in the conflict graph bounds the packing.
  int clique_cover(Mask cands) const {
    int cliques = 0;
    while (any(cands)) {
      Mask clique_common = cands;
      Mask taken{};
      for_each_bit(cands, [&](int v) {
        if (test(clique_common, v)) {
          set(taken, v);
          clique_common &= conflict_[v];
        }
      });
      cands &= ~taken;
      ++cliques;
    }
    return cliques;
  }

  void recurse(Mask cands, Mask chosen, int count) {
    ++nodes_;
    // Vertices with at most one conflicting candidate can always be taken.
    for (bool changed = true; changed;) {
      changed = false;
      int forced = -1;
      for_each_bit(cands, [&](int v) {
        if (forced < 0 && popcount(conflict_[v] & cands) <= 1) forced = v;
      });
      if (forced >= 0) {
        set(chosen, forced);
        ++count;
        cands &= ~conflict_[forced];
        Mask self{};
        set(self, forced);
        cands &= ~self;
        changed = true;
      }
    }
    if (!any(cands)) {
      if (count > best_size_) {
        best_size_ = count;
        best_ = chosen;
      }
      return;
    }
    if (count + clique_cover(cands) <= best_size_) return;

    int pick = -1, pick_deg = -1;
    for_each_bit(cands, [&](int v) {
      int d = popcount(conflict_[v] & cands);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    Mask self{};
    set(self, pick);
    Mask with = chosen;
    set(with, pick);
    recurse(cands & ~conflict_[pick] & ~self, with, count + 1);
    recurse(cands & ~self, chosen, count);
  }

  std::vector<Mask> conflict_;
  Mask allowed_;
  int n_;
  Mask best_{};
  int best_size_ = 0;
  long long nodes_ = 0;
};

template <typename Mask>
ExactResult exact_domination_impl(const XYInstance& inst) {
  auto prob = domination_requirements<Mask>(inst);
  return DominationSearch<Mask>(std::move(prob), inst.graph.order()).run();
}

template <typename Mask>
ExactResult exact_packing_impl(const XYInstance& inst) {
  const Graph& g = inst.graph;
  VertexSet allowed = g.all_vertices() - closed_neighborhood(g, inst.x_set) - inst.y_set;
  std::vector<Mask> conflict(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet ball2 = closed_neighborhood(g, g.closed_neighbors(v));
    ball2.erase(v);
    conflict[v] = to_mask<Mask>(ball2 & allowed);
  }
  return PackingSearch<Mask>(std::move(conflict), to_mask<Mask>(allowed), g.order()).run();
}

}  // namespace detail

/// Minimum (X,Y)-dominating set in the instance's mode, by branch and bound.
inline ExactResult exact_domination(const XYInstance& inst, const SolveOptions& opts = SolveOptions::from_env()) {
  inst.validate();
  detail::guard(inst.graph, opts);
  if (inst.graph.order() <= 64) return detail::exact_domination_impl<std::uint64_t>(inst);
  return detail::exact_domination_impl<detail::WideMask>(inst);
}

/// Maximum (X,Y)-packing: maximum independent set of the distance-2 conflict
/// graph restricted to V \ (N[X] u Y).
inline ExactResult exact_packing(const XYInstance& inst, const SolveOptions& opts = SolveOptions::from_env()) {
  inst.validate();
  detail::guard(inst.graph, opts);
  if (inst.graph.order() <= 64) return detail::exact_packing_impl<std::uint64_t>(inst);
  return detail::exact_packing_impl<detail::WideMask>(inst);
}

inline int gamma(const Graph& g) { return exact_domination(XYInstance::plain(g.uncolored())).value; }
inline int rho(const Graph& g) { return exact_packing(XYInstance::plain(g.uncolored())).value; }

}  // namespace dompack
