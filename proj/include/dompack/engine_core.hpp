#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dompack/certificates.hpp"
#include "dompack/graph.hpp"
#include "dompack/oracles.hpp"
#include "dompack/rational.hpp"

namespace dompack {

enum class RuleId {
  Isolated,
  XElim,
  YEdge,
  LowDegree,
  YPendant,
  TreewidthStep,
  DhYPrune,
  DhPendant,
  DhTwin,
  TdXEdge,
  TdMultiX,
  TdLeafX,
  TdNearX,
  TdPendant,
  TdDegreeTwo,
  TdShrink,
  TdGadget,
  TdFan,
  TwwClaim,
  TwwContract,
};

inline std::string_view to_string(RuleId r) {
  switch (r) {
    case RuleId::Isolated: return "R0_isolated";
    case RuleId::XElim: return "R1_x_elim";
    case RuleId::YEdge: return "R2_y_edge";
    case RuleId::LowDegree: return "R3_low_degree";
    case RuleId::YPendant: return "R4_y_pendant";
    case RuleId::TreewidthStep: return "tw_class_step";
    case RuleId::DhYPrune: return "dh_y_prune";
    case RuleId::DhPendant: return "dh_pendant";
    case RuleId::DhTwin: return "dh_twin";
    case RuleId::TdXEdge: return "td_x_edge";
    case RuleId::TdMultiX: return "td_multi_x";
    case RuleId::TdLeafX: return "td_leaf_x";
    case RuleId::TdNearX: return "td_near_x";
    case RuleId::TdPendant: return "td_pendant";
    case RuleId::TdDegreeTwo: return "td_degree_two";
    case RuleId::TdShrink: return "td_shrink";
    case RuleId::TdGadget: return "td_gadget";
    case RuleId::TdFan: return "td_fan";
    case RuleId::TwwClaim: return "tww_claim";
    case RuleId::TwwContract: return "tww_contract";
  }
  return "unknown";
}

/// Working instance of the rewrite system. Vertex ids are stable: deleted
/// vertices stay dead and added vertices get fresh ids past the original range.
struct WorkState {
  std::vector<char> alive;
  std::vector<ColoredNeighbors> adj;
  std::set<Vertex> x;
  std::set<Vertex> y;
  std::vector<std::set<Vertex>> completion;  // chordal supergraph, treewidth driver only

  static WorkState from(const XYInstance& inst, const Graph* completion = nullptr) {
    const Graph& g = inst.graph;
    WorkState s;
    s.alive.assign(g.order(), 1);
    s.adj.resize(g.order());
    for (const auto& e : g.edges()) {
      s.adj[e.u][e.v] = e.color;
      s.adj[e.v][e.u] = e.color;
    }
    for (Vertex v : inst.x_set.members()) s.x.insert(v);
    for (Vertex v : inst.y_set.members()) s.y.insert(v);
    if (completion) {
      s.completion.resize(g.order());
      for (const auto& e : completion->edges()) {
        s.completion[e.u].insert(e.v);
        s.completion[e.v].insert(e.u);
      }
    }
    return s;
  }

  friend bool operator==(const WorkState&, const WorkState&) = default;

  int capacity() const { return static_cast<int>(alive.size()); }
  bool is_alive(Vertex v) const { return v >= 0 && v < capacity() && alive[v]; }
  bool in_x(Vertex v) const { return x.count(v) > 0; }
  bool in_y(Vertex v) const { return y.count(v) > 0; }
  int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return adj[u].count(v) > 0; }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < capacity(); ++v)
      if (alive[v]) out.push_back(v);
    return out;
  }

  bool empty() const { return std::none_of(alive.begin(), alive.end(), [](char a) { return a != 0; }); }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& [w, c] : adj[v]) out.push_back(w);
    return out;
  }

  std::vector<Vertex> black_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& [w, c] : adj[v])
      if (c == EdgeColor::Black) out.push_back(w);
    return out;
  }

  std::vector<Vertex> red_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& [w, c] : adj[v])
      if (c == EdgeColor::Red) out.push_back(w);
    return out;
  }

  bool near_x(Vertex v) const {
    if (in_x(v)) return true;
    for (const auto& [w, c] : adj[v])
      if (in_x(w)) return true;
    return false;
  }

  int x_weight() const {
    int w = 0;
    for (Vertex v : x) w += std::min(degree(v), 2);
    return w;
  }

  /// Vertices at distance exactly two from v.
  std::set<Vertex> second_neighbors(Vertex v) const {
    std::set<Vertex> out;
    for (const auto& [a, c] : adj[v])
      for (const auto& [b, c2] : adj[a])
        if (b != v && !adjacent(v, b)) out.insert(b);
    return out;
  }
};

/// One rewrite step: the deltas turn the parent state into the child state,
/// and the unwind fields turn a child witness into a parent witness.
struct RuleApplication {
  RuleId rule{};
  std::vector<Vertex> removed_vertices;
  std::vector<std::pair<Vertex, Vertex>> removed_edges;
  std::vector<Vertex> added_vertices;
  std::vector<Edge> added_edges;
  std::vector<Vertex> x_added;
  std::vector<Vertex> x_removed;
  std::vector<Vertex> y_added;
  std::vector<Vertex> y_removed;
  std::vector<Vertex> unwind_d;
  std::vector<Vertex> unwind_p;
  std::optional<std::pair<Vertex, Vertex>> unwind_replace;  // (w, u): w becomes u
  int budget_additive = 0;
  nlohmann::json payload = nlohmann::json::object();
};

/// Applies the deltas in a fixed order: edge removals, vertex removals
/// (which also drop the vertex from X, Y and the completion), vertex
/// additions, edge additions, then X and Y removals before additions.
inline void apply_rule(WorkState& s, const RuleApplication& r) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(r.rule)) + ": " + what);
  };
  for (auto [u, v] : r.removed_edges) {
    if (!s.is_alive(u) || !s.is_alive(v) || !s.adjacent(u, v)) fail("removing a missing edge");
    s.adj[u].erase(v);
    s.adj[v].erase(u);
  }
  for (Vertex v : r.removed_vertices) {
    if (!s.is_alive(v)) fail("removing a dead vertex");
    for (const auto& [w, c] : s.adj[v]) s.adj[w].erase(v);
    s.adj[v].clear();
    s.alive[v] = 0;
    s.x.erase(v);
    s.y.erase(v);
    if (!s.completion.empty()) {
      for (Vertex w : s.completion[v]) s.completion[w].erase(v);
      s.completion[v].clear();
    }
  }
  for (Vertex v : r.added_vertices) {
    if (v < s.capacity()) fail("added vertex id is not fresh");
    s.alive.resize(v + 1, 0);
    s.adj.resize(v + 1);
    if (!s.completion.empty()) s.completion.resize(v + 1);
    s.alive[v] = 1;
  }
  for (const auto& e : r.added_edges) {
    if (!s.is_alive(e.u) || !s.is_alive(e.v) || e.u == e.v) fail("bad added edge");
    s.adj[e.u][e.v] = e.color;
    s.adj[e.v][e.u] = e.color;
  }
  for (Vertex v : r.x_removed) s.x.erase(v);
  for (Vertex v : r.x_added) {
    if (!s.is_alive(v)) fail("X gains a dead vertex");
    s.x.insert(v);
  }
  for (Vertex v : r.y_removed) s.y.erase(v);
  for (Vertex v : r.y_added) {
    if (!s.is_alive(v)) fail("Y gains a dead vertex");
    s.y.insert(v);
  }
  for (Vertex v : s.x)
    if (s.y.count(v)) fail("vertex " + std::to_string(v) + " is in both X and Y");
}

/// Moves `vs` into X; any of them in Y leave Y.
inline void promote_to_x(const WorkState& s, RuleApplication& r, std::vector<Vertex> vs) {
  for (Vertex v : vs)
    if (s.in_y(v)) r.y_removed.push_back(v);
  r.x_added = std::move(vs);
}

/// Re-applies a trace to the initial state, returning every intermediate state.
inline std::vector<WorkState> replay_trace(const WorkState& initial, const std::vector<RuleApplication>& trace) {
  std::vector<WorkState> states{initial};
  for (const auto& r : trace) {
    WorkState next = states.back();
    apply_rule(next, r);
    states.push_back(std::move(next));
  }
  return states;
}

struct UnwindCheck {
  int d_size;
  int p_size;
  long long bound;
};

struct WitnessPair {
  std::string class_tag;
  DominationMode mode = DominationMode::Plain;
  VertexSet d_set;
  VertexSet p_set;
  Rational certified_constant;
  long long additive = 0;  // |D| <= constant * |P| + additive
  std::vector<RuleApplication> trace;
  std::vector<UnwindCheck> unwind_checks;
  nlohmann::json details = nlohmann::json::object();

  std::optional<Rational> achieved_ratio() const {
    if (p_set.empty()) return std::nullopt;
    return Rational(d_set.size(), p_set.size());
  }

  bool within_budget() const {
    Rational lhs(d_set.size());
    Rational rhs(certified_constant.num() * p_set.size() + additive * certified_constant.den(),
                 certified_constant.den());
    return lhs <= rhs;
  }
};

struct EngineOptions {
  std::vector<WorkState>* snapshots = nullptr;  // receives the initial state and every child
  std::vector<RuleApplication>* trace_sink = nullptr;  // receives each rule as it fires
};

/// Drives a rewrite loop and unwinds the recorded trace into a witness.
class Engine {
 public:
  Engine(WorkState initial, const EngineOptions& opts) : state_(std::move(initial)), opts_(opts) {
    if (opts_.snapshots) opts_.snapshots->push_back(state_);
  }

  const WorkState& state() const { return state_; }
  const std::vector<RuleApplication>& trace() const { return trace_; }

  void apply(RuleApplication r) {
    apply_rule(state_, r);
    if (opts_.trace_sink) opts_.trace_sink->push_back(r);
    trace_.push_back(std::move(r));
    if (opts_.snapshots) opts_.snapshots->push_back(state_);
  }

  Vertex fresh_vertex(int offset = 0) const { return state_.capacity() + offset; }

  /// Unwinds from D = P = empty, checking |D| <= factor*|P| + additive after every step.
  std::pair<std::set<Vertex>, std::set<Vertex>> unwind(long long factor, std::vector<UnwindCheck>& checks) const {
    std::set<Vertex> d, p;
    for (auto it = trace_.rbegin(); it != trace_.rend(); ++it) {
      const RuleApplication& r = *it;
      if (r.unwind_replace) {
        auto [w, u] = *r.unwind_replace;
        if (d.erase(w)) d.insert(u);
        if (p.erase(w)) p.insert(u);
      }
      d.insert(r.unwind_d.begin(), r.unwind_d.end());
      p.insert(r.unwind_p.begin(), r.unwind_p.end());
      long long bound = factor * static_cast<long long>(p.size()) + r.budget_additive;
      checks.push_back({static_cast<int>(d.size()), static_cast<int>(p.size()), bound});
      if (static_cast<long long>(d.size()) > bound)
        throw Error(ErrorKind::GuaranteeViolated, std::string("unwinding ") + std::string(to_string(r.rule)) +
                                                      " gives |D| = " + std::to_string(d.size()) + " > " +
                                                      std::to_string(bound));
    }
    return {d, p};
  }

 private:
  WorkState state_;
  std::vector<RuleApplication> trace_;
  EngineOptions opts_;
};

/// Turns unwound sets into a witness over the original vertex range and
/// re-checks it against the original instance.
inline WitnessPair finish_witness(const XYInstance& inst, const Engine& engine, std::string class_tag,
                                  long long factor) {
  WitnessPair w;
  w.class_tag = std::move(class_tag);
  w.mode = inst.mode;
  w.certified_constant = Rational(factor);
  auto [d, p] = engine.unwind(factor, w.unwind_checks);
  const int n = inst.graph.order();
  w.d_set = VertexSet(n);
  w.p_set = VertexSet(n);
  for (Vertex v : d) {
    if (v >= n) throw Error(ErrorKind::GuaranteeViolated, "auxiliary vertex survived unwinding");
    w.d_set.insert(v);
  }
  for (Vertex v : p) {
    if (v >= n) throw Error(ErrorKind::GuaranteeViolated, "auxiliary vertex survived unwinding");
    w.p_set.insert(v);
  }
  w.trace = engine.trace();
  if (!check_xy_dominating(inst, w.d_set))
    throw Error(ErrorKind::GuaranteeViolated, "unwound set does not dominate the instance");
  if (!check_xy_packing(inst, w.p_set))
    throw Error(ErrorKind::GuaranteeViolated, "unwound set is not a packing of the instance");
  return w;
}

inline Error stalled(const WorkState& s, const std::string& driver) {
  nlohmann::json j = {{"vertices", s.vertices()}, {"x", s.x}, {"y", s.y}};
  return Error(ErrorKind::Stalled, driver + " found no applicable rule on " + j.dump());
}

// ---------------------------------------------------------------------------
// Generic rules

/// R0: an isolated vertex. Outside X and Y it joins both D and P.
inline std::optional<RuleApplication> rule_R0_isolated(const WorkState& s) {
  for (Vertex a : s.vertices())
    if (s.degree(a) == 0) {
      RuleApplication r;
      r.rule = RuleId::Isolated;
      r.removed_vertices = {a};
      if (!s.in_x(a) && !s.in_y(a)) r.unwind_d = r.unwind_p = {a};
      r.payload = {{"a", a}};
      return r;
    }
  return std::nullopt;
}

/// R1: a vertex of X is deleted and its neighbors become pre-dominated.
inline std::optional<RuleApplication> rule_R1_x_elim(const WorkState& s) {
  if (s.x.empty()) return std::nullopt;
  Vertex a = *s.x.begin();
  RuleApplication r;
  r.rule = RuleId::XElim;
  r.removed_vertices = {a};
  for (Vertex w : s.neighbors(a))
    if (!s.in_x(w) && !s.in_y(w)) r.y_added.push_back(w);
  r.payload = {{"a", a}, {"neighbors", s.neighbors(a)}};
  return r;
}

/// R2: an edge with both ends in Y.
inline std::optional<RuleApplication> rule_R2_y_edge(const WorkState& s) {
  for (Vertex u : s.y)
    for (Vertex v : s.neighbors(u))
      if (u < v && s.in_y(v)) {
        RuleApplication r;
        r.rule = RuleId::YEdge;
        r.removed_edges = {{u, v}};
        r.payload = {{"edge", {u, v}}};
        return r;
      }
  return std::nullopt;
}

/// R3(c): with X empty, a vertex a outside Y with 1 <= deg(a) <= c, smallest
/// degree first. Its neighbors become X; unwinding adds N(a) to D and a to P.
inline std::optional<RuleApplication> rule_R3_low_degree(const WorkState& s, int c) {
  if (!s.x.empty()) return std::nullopt;
  Vertex best = -1;
  for (Vertex a : s.vertices()) {
    if (s.in_y(a)) continue;
    int d = s.degree(a);
    if (d < 1 || d > c) continue;
    if (best < 0 || d < s.degree(best)) best = a;
  }
  if (best < 0) return std::nullopt;
  RuleApplication r;
  r.rule = RuleId::LowDegree;
  r.removed_vertices = {best};
  promote_to_x(s, r, s.neighbors(best));
  r.unwind_d = s.neighbors(best);
  r.unwind_p = {best};
  r.payload = {{"a", best}, {"neighbors", s.neighbors(best)}, {"c", c}};
  return r;
}

/// R4: a vertex of Y with at most one neighbor.
inline std::optional<RuleApplication> rule_R4_y_pendant(const WorkState& s) {
  for (Vertex y : s.y)
    if (s.degree(y) <= 1) {
      RuleApplication r;
      r.rule = RuleId::YPendant;
      r.removed_vertices = {y};
      r.payload = {{"y", y}};
      return r;
    }
  return std::nullopt;
}

}  // namespace dompack
