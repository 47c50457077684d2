#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dompack/certificates.hpp"
#include "dompack/engine_core.hpp"
#include "dompack/recognizers.hpp"

namespace dompack {

namespace detail {

using RuleFn = std::function<std::optional<RuleApplication>(const WorkState&)>;

inline std::optional<RuleApplication> first_applicable(const WorkState& s, const std::vector<RuleFn>& rules) {
  for (const auto& rule : rules)
    if (auto r = rule(s)) return r;
  return std::nullopt;
}

inline std::vector<Vertex> sorted(std::set<Vertex> s) { return {s.begin(), s.end()}; }

inline void require_mode(const XYInstance& inst, DominationMode mode, const char* driver) {
  inst.validate();
  if (inst.mode != mode)
    throw Error(ErrorKind::InvalidArgument,
                std::string(driver) + " works in " + std::string(to_string(mode)) + " mode");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Planar graphs: generic rules with c = 10

inline WitnessPair run_planar(const XYInstance& inst, const RotationSystem* embedding = nullptr,
                              const EngineOptions& opts = {}) {
  detail::require_mode(inst, DominationMode::Plain, "planar driver");
  if (embedding)
    if (auto err = rotation_planarity_error(inst.graph, *embedding)) throw Error(ErrorKind::CertificateInvalid, *err);
  Engine engine(WorkState::from(inst), opts);
  const std::vector<detail::RuleFn> rules = {
      rule_R0_isolated, rule_R4_y_pendant, rule_R2_y_edge, rule_R1_x_elim,
      [](const WorkState& s) { return rule_R3_low_degree(s, 10); }};
  while (!engine.state().empty()) {
    auto r = detail::first_applicable(engine.state(), rules);
    if (!r) throw stalled(engine.state(), "planar driver");
    engine.apply(std::move(*r));
  }
  return finish_witness(inst, engine, "planar", 10);
}

inline WitnessPair run_planar(const Graph& g, const RotationSystem* embedding = nullptr,
                              const EngineOptions& opts = {}) {
  return run_planar(XYInstance::plain(g), embedding, opts);
}

// ---------------------------------------------------------------------------
// Treewidth: generic rules with c = k, then the class step on the completion

namespace detail {

inline bool simplicial_in(const WorkState& s, Vertex v, const std::set<Vertex>& outside) {
  std::vector<Vertex> nb;
  for (Vertex w : s.completion[v])
    if (!outside.count(w)) nb.push_back(w);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!s.completion[nb[i]].count(nb[j])) return false;
  return true;
}

/// Y-vertices removable by repeated simplicial elimination in the completion.
inline std::set<Vertex> peel_y(const WorkState& s) {
  std::set<Vertex> peeled;
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex y : s.y)
      if (!peeled.count(y) && simplicial_in(s, y, peeled)) {
        peeled.insert(y);
        grew = true;
        break;
      }
  }
  return peeled;
}

inline std::optional<RuleApplication> treewidth_class_step(const WorkState& s, int k) {
  std::set<Vertex> peeled = peel_y(s);
  auto rest_of = [&](Vertex v) {
    std::vector<Vertex> c;
    for (Vertex w : s.completion[v])
      if (!peeled.count(w)) c.push_back(w);
    return c;
  };
  Vertex v = -1;
  for (Vertex a : s.vertices())
    if (!peeled.count(a) && !s.in_y(a) && simplicial_in(s, a, peeled)) {
      v = a;
      break;
    }
  for (Vertex a : s.vertices()) {
    if (v >= 0) break;
    if (!peeled.count(a) && !s.in_y(a) && static_cast<int>(rest_of(a).size()) <= k) v = a;
  }
  if (v < 0) return std::nullopt;

  std::vector<Vertex> c = rest_of(v);
  std::vector<Vertex> c1, c2, c2p;
  for (Vertex w : c) {
    if (s.adjacent(v, w)) {
      c1.push_back(w);
      continue;
    }
    for (const auto& [m, col] : s.adj[v])
      if (s.adjacent(m, w)) {
        c2.push_back(w);
        c2p.push_back(m);
        break;
      }
  }
  std::set<Vertex> add(c1.begin(), c1.end());
  add.insert(c2p.begin(), c2p.end());
  if (static_cast<int>(add.size()) > k)
    throw Error(ErrorKind::GuaranteeViolated, "class step at vertex " + std::to_string(v) + " needs " +
                                                  std::to_string(add.size()) + " > k dominators");

  RuleApplication r;
  r.rule = RuleId::TreewidthStep;
  r.removed_vertices = {v};
  promote_to_x(s, r, c1);
  for (Vertex w : c2)
    if (!s.in_x(w) && !s.in_y(w)) r.y_added.push_back(w);
  r.unwind_d = add.empty() ? std::vector<Vertex>{v} : sorted(add);
  r.unwind_p = {v};
  std::vector<Vertex> b;
  for (Vertex w : s.completion[v])
    if (peeled.count(w)) b.push_back(w);
  r.payload = {{"v", v}, {"B", b}, {"C", c}, {"C1", c1}, {"C2", c2}, {"C2_prime", sorted({c2p.begin(), c2p.end()})}};
  return r;
}

}  // namespace detail

inline WitnessPair run_treewidth(const XYInstance& inst, const Graph& completion, int k,
                                 const EngineOptions& opts = {}) {
  detail::require_mode(inst, DominationMode::Plain, "treewidth driver");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "treewidth driver needs k >= 1");
  if (auto err = tw_certificate_error(inst.graph, completion, k)) throw Error(ErrorKind::CertificateInvalid, *err);
  Engine engine(WorkState::from(inst, &completion), opts);
  const std::vector<detail::RuleFn> rules = {
      rule_R0_isolated,
      rule_R4_y_pendant,
      rule_R2_y_edge,
      rule_R1_x_elim,
      [k](const WorkState& s) { return rule_R3_low_degree(s, k); },
      [k](const WorkState& s) { return detail::treewidth_class_step(s, k); }};
  while (!engine.state().empty()) {
    auto r = detail::first_applicable(engine.state(), rules);
    if (!r) throw stalled(engine.state(), "treewidth driver");
    engine.apply(std::move(*r));
  }
  return finish_witness(inst, engine, "treewidth", k);
}

inline WitnessPair run_treewidth(const Graph& g, const Graph& completion, int k, const EngineOptions& opts = {}) {
  return run_treewidth(XYInstance::plain(g), completion, k, opts);
}

// ---------------------------------------------------------------------------
// Distance-hereditary graphs, total domination

namespace detail {

inline std::optional<RuleApplication> dh_y_prune(const WorkState& s) {
  for (Vertex y : s.y) {
    int free_nb = 0;
    for (Vertex w : s.neighbors(y)) free_nb += !s.in_x(w) && !s.in_y(w);
    if (free_nb <= 1) {
      RuleApplication r;
      r.rule = RuleId::DhYPrune;
      r.removed_vertices = {y};
      r.payload = {{"y", y}};
      return r;
    }
  }
  return std::nullopt;
}

inline std::optional<RuleApplication> dh_pendant(const WorkState& s) {
  for (Vertex u : s.vertices())
    if (s.degree(u) == 1 && !s.in_x(u) && !s.in_y(u)) {
      Vertex v = s.neighbors(u).front();
      RuleApplication r;
      r.rule = RuleId::DhPendant;
      r.removed_vertices = {u};
      promote_to_x(s, r, std::vector<Vertex>{v});
      r.unwind_d = {std::min(u, v), std::max(u, v)};
      r.unwind_p = {u};
      r.payload = {{"u", u}, {"v", v}};
      return r;
    }
  return std::nullopt;
}

inline std::optional<RuleApplication> dh_twin(const WorkState& s) {
  auto vs = s.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Vertex u = vs[i], v = vs[j];
      std::set<Vertex> nu, nv;
      for (Vertex w : s.neighbors(u))
        if (w != v) nu.insert(w);
      for (Vertex w : s.neighbors(v))
        if (w != u) nv.insert(w);
      if (nu != nv) continue;
      Vertex drop = s.in_y(u) ? u : s.in_y(v) ? v : u;
      RuleApplication r;
      r.rule = RuleId::DhTwin;
      r.removed_vertices = {drop};
      r.payload = {{"u", u}, {"v", v}, {"true_twins", s.adjacent(u, v)}, {"deleted", drop}};
      return r;
    }
  return std::nullopt;
}

}  // namespace detail

inline WitnessPair run_distance_hereditary(const XYInstance& inst, const EngineOptions& opts = {}) {
  detail::require_mode(inst, DominationMode::Total, "distance-hereditary driver");
  if (!inst.x_set.empty())
    throw Error(ErrorKind::InvalidArgument, "distance-hereditary driver expects X to be empty");
  if (!recognize_distance_hereditary(inst.graph))
    throw Error(ErrorKind::Stalled, "input is not distance-hereditary");
  Engine engine(WorkState::from(inst), opts);
  // Pendants go before Y-pruning: pruning must never leave a free vertex isolated,
  // since isolation would exempt it from total domination.
  const std::vector<detail::RuleFn> rules = {rule_R0_isolated, rule_R1_x_elim, detail::dh_pendant,
                                             detail::dh_y_prune, detail::dh_twin};
  while (!engine.state().empty()) {
    auto r = detail::first_applicable(engine.state(), rules);
    if (!r) throw stalled(engine.state(), "distance-hereditary driver");
    engine.apply(std::move(*r));
  }
  return finish_witness(inst, engine, "distance-hereditary", 2);
}

inline WitnessPair run_distance_hereditary(const Graph& g, const EngineOptions& opts = {}) {
  const int n = g.order();
  return run_distance_hereditary(XYInstance::make(g, VertexSet(n), VertexSet(n), DominationMode::Total), opts);
}

// ---------------------------------------------------------------------------
// 2-degenerate graphs: X-only instances, budget 7|P| + 2|X^{2+}| + |X^1|

namespace detail {

inline RuleApplication td_rule(const WorkState& s, RuleId id) {
  RuleApplication r;
  r.rule = id;
  r.budget_additive = s.x_weight();
  return r;
}

inline std::vector<Vertex> x_neighbors(const WorkState& s, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex w : s.neighbors(u))
    if (s.in_x(w)) out.push_back(w);
  return out;
}

inline std::optional<RuleApplication> td_x_edge(const WorkState& s) {
  for (Vertex a : s.x)
    for (Vertex b : s.neighbors(a))
      if (a < b && s.in_x(b)) {
        auto r = td_rule(s, RuleId::TdXEdge);
        r.removed_edges = {{a, b}};
        r.payload = {{"edge", {a, b}}};
        return r;
      }
  return std::nullopt;
}

inline std::optional<RuleApplication> td_multi_x(const WorkState& s) {
  for (Vertex u : s.vertices()) {
    if (s.in_x(u)) continue;
    auto xs = x_neighbors(s, u);
    if (xs.size() >= 2) {
      auto r = td_rule(s, RuleId::TdMultiX);
      r.removed_edges = {{u, xs[0]}};
      r.payload = {{"u", u}, {"x1", xs[0]}, {"x2", xs[1]}};
      return r;
    }
  }
  return std::nullopt;
}

inline std::optional<RuleApplication> td_isolated(const WorkState& s) {
  auto r = rule_R0_isolated(s);
  if (r) r->budget_additive = s.x_weight();
  return r;
}

inline std::optional<RuleApplication> td_leaf_x(const WorkState& s) {
  for (Vertex u : s.vertices()) {
    if (s.in_x(u)) continue;
    auto xs = x_neighbors(s, u);
    if (!xs.empty() && s.degree(u) - static_cast<int>(xs.size()) <= 1) {
      auto r = td_rule(s, RuleId::TdLeafX);
      r.removed_vertices = {u};
      r.payload = {{"u", u}};
      return r;
    }
  }
  return std::nullopt;
}

inline std::optional<RuleApplication> td_near_x(const WorkState& s) {
  for (Vertex u : s.vertices()) {
    if (s.in_x(u) || x_neighbors(s, u).empty()) continue;
    int far = 0;
    for (Vertex w : s.neighbors(u)) far += !s.near_x(w);
    if (far <= 1) {
      auto r = td_rule(s, RuleId::TdNearX);
      r.removed_vertices = {u};
      r.payload = {{"u", u}};
      return r;
    }
  }
  return std::nullopt;
}

inline std::optional<RuleApplication> td_pendant(const WorkState& s) {
  for (Vertex u : s.vertices()) {
    if (s.in_x(u) || s.degree(u) != 1) continue;
    Vertex v = s.neighbors(u).front();
    if (s.in_x(v)) continue;
    auto r = td_rule(s, RuleId::TdPendant);
    r.removed_vertices = {u};
    promote_to_x(s, r, std::vector<Vertex>{v});
    r.unwind_d = {v};
    r.unwind_p = {u};
    r.payload = {{"u", u}, {"v", v}};
    return r;
  }
  return std::nullopt;
}

inline std::optional<RuleApplication> td_degree_two(const WorkState& s) {
  for (Vertex u : s.vertices()) {
    if (s.in_x(u) || s.degree(u) != 2 || !x_neighbors(s, u).empty()) continue;
    auto r = td_rule(s, RuleId::TdDegreeTwo);
    r.removed_vertices = {u};
    promote_to_x(s, r, s.neighbors(u));
    r.unwind_d = s.neighbors(u);
    r.unwind_p = {u};
    r.payload = {{"u", u}, {"neighbors", s.neighbors(u)}};
    return r;
  }
  return std::nullopt;
}

/// Peeling layers: A1 = degree <= 2, A2 = degree <= 2 once A1 is gone, A3 likewise.
inline std::vector<std::set<Vertex>> degree_layers(const WorkState& s, int count) {
  std::vector<std::set<Vertex>> layers;
  std::set<Vertex> gone;
  for (int i = 0; i < count; ++i) {
    std::set<Vertex> layer;
    for (Vertex v : s.vertices()) {
      if (gone.count(v)) continue;
      int d = 0;
      for (Vertex w : s.neighbors(v)) d += !gone.count(w);
      if (d <= 2) layer.insert(v);
    }
    gone.insert(layer.begin(), layer.end());
    layers.push_back(std::move(layer));
  }
  return layers;
}

inline std::optional<RuleApplication> td_main(const WorkState& s) {
  auto layers = degree_layers(s, 3);
  const auto& a2 = layers[1];
  Vertex u = -1, v1 = -1;
  for (Vertex a : layers[2]) {
    for (Vertex w : s.neighbors(a))
      if (a2.count(w)) {
        u = a;
        v1 = w;
        break;
      }
    if (u >= 0) break;
  }
  if (u < 0) return std::nullopt;
  auto broken = [&](const std::string& what) {
    return Error(ErrorKind::Stalled, "2-degenerate main step at " + std::to_string(u) + ": " + what);
  };
  auto xs = x_neighbors(s, v1);
  if (xs.size() != 1 || s.degree(v1) != 3 || s.near_x(u)) throw broken("unexpected neighborhood structure");
  const Vertex x1 = xs[0];

  std::vector<Vertex> w, t;
  for (Vertex a : s.neighbors(u)) {
    if (!s.near_x(a)) w.push_back(a);
    if (a2.count(a)) t.push_back(a);
  }
  if (w.size() > 2) throw broken("more than two free neighbors");

  if (w.size() <= 1) {
    auto r = td_rule(s, RuleId::TdShrink);
    r.removed_vertices = {u, v1};
    r.unwind_d = {u};
    r.payload = {{"u", u}, {"v1", v1}, {"x1", x1}, {"W", w}};
    return r;
  }
  if (w.size() + t.size() != static_cast<std::size_t>(s.degree(u))) throw broken("neighbor outside W and A2");

  const Vertex y = s.capacity();
  if (t.size() == 1) {
    Vertex u2 = -1;
    for (Vertex a : s.neighbors(v1))
      if (a != u && !s.near_x(a)) u2 = a;
    if (u2 < 0) throw broken("second free neighbor of v1 missing");
    auto r = td_rule(s, RuleId::TdGadget);
    r.removed_vertices = {u, v1};
    r.added_vertices = {y};
    r.added_edges = {{u2, y, EdgeColor::Black}};
    promote_to_x(s, r, std::vector<Vertex>{w[0], w[1], y});
    std::set<Vertex> d = {w[0], w[1], v1};
    r.unwind_d = sorted(d);
    r.unwind_p = {u};
    r.payload = {{"u", u}, {"v1", v1}, {"x1", x1}, {"u_prime", u2}, {"W", w}, {"y", y}};
    return r;
  }
  auto r = td_rule(s, RuleId::TdFan);
  r.removed_vertices = {u};
  r.removed_vertices.insert(r.removed_vertices.end(), t.begin(), t.end());
  r.added_vertices = {y};
  r.added_edges = {{w[0], y, EdgeColor::Black}};
  promote_to_x(s, r, std::vector<Vertex>{y});
  r.unwind_d = {u};
  r.payload = {{"u", u}, {"T", t}, {"W", w}, {"y", y}};
  return r;
}

inline bool twodeg_done(const WorkState& s) {
  for (Vertex v : s.vertices())
    if (!s.near_x(v)) return false;
  return true;
}

}  // namespace detail

inline WitnessPair run_twodeg(const XYInstance& inst, const EngineOptions& opts = {}) {
  detail::require_mode(inst, DominationMode::Plain, "2-degenerate driver");
  if (!inst.y_set.empty()) throw Error(ErrorKind::InvalidArgument, "2-degenerate driver does not use Y");
  if (degeneracy(inst.graph) > 2) throw Error(ErrorKind::Stalled, "input is not 2-degenerate");
  Engine engine(WorkState::from(inst), opts);
  const long long initial_weight = engine.state().x_weight();
  const std::vector<detail::RuleFn> rules = {detail::td_x_edge, detail::td_multi_x,  detail::td_isolated,
                                             detail::td_leaf_x, detail::td_near_x,   detail::td_pendant,
                                             detail::td_degree_two, detail::td_main};
  while (!detail::twodeg_done(engine.state())) {
    auto r = detail::first_applicable(engine.state(), rules);
    if (!r) throw stalled(engine.state(), "2-degenerate driver");
    engine.apply(std::move(*r));
  }
  WitnessPair w = finish_witness(inst, engine, "2-degenerate", 7);
  w.additive = initial_weight;
  return w;
}

inline WitnessPair run_twodeg(const Graph& g, const EngineOptions& opts = {}) {
  return run_twodeg(XYInstance::plain(g), opts);
}

// ---------------------------------------------------------------------------
// Bounded twin-width, B-domination with X empty

namespace detail {

inline std::optional<RuleApplication> tww_claim(const WorkState& s, int k) {
  for (Vertex u : s.vertices()) {
    if (s.in_y(u)) continue;
    auto b = s.black_neighbors(u);
    if (static_cast<int>(b.size()) > k + 1) continue;
    auto red = s.red_neighbors(u);
    std::set<Vertex> ball(b.begin(), b.end());
    ball.insert(red.begin(), red.end());
    std::set<Vertex> second = s.second_neighbors(u);
    std::vector<Vertex> s_black, s_red;
    std::set<Vertex> d(ball.begin(), ball.end());
    d.insert(u);
    for (Vertex z : second) {
      bool black_touch = false;
      for (Vertex m : s.black_neighbors(z)) black_touch = black_touch || ball.count(m);
      if (black_touch) {
        s_black.push_back(z);
        continue;
      }
      s_red.push_back(z);
      auto zb = s.black_neighbors(z);
      d.insert(zb.empty() ? z : zb.front());
    }
    for (Vertex r : red) {
      auto rb = s.black_neighbors(r);
      if (!rb.empty()) d.insert(rb.front());
    }
    RuleApplication r;
    r.rule = RuleId::TwwClaim;
    r.removed_vertices = {u};
    r.removed_vertices.insert(r.removed_vertices.end(), ball.begin(), ball.end());
    for (Vertex z : second)
      if (!s.in_y(z)) r.y_added.push_back(z);
    r.unwind_d = sorted(d);
    r.unwind_p = {u};
    r.payload = {{"u", u}, {"B", b}, {"R", red}, {"S_B", s_black}, {"S_R", s_red}};
    return r;
  }
  return std::nullopt;
}

inline RuleApplication tww_contract(const WorkState& s, Vertex u, Vertex v, Vertex w) {
  const bool both_y = s.in_y(u) && s.in_y(v);
  const Vertex keep = both_y || !s.in_y(u) ? u : v;
  RuleApplication r;
  r.rule = RuleId::TwwContract;
  r.removed_vertices = {u, v};
  r.added_vertices = {w};
  for (const auto& [x, c] : merged_neighbors(s.adj[u], s.adj[v], u, v)) r.added_edges.push_back({w, x, c});
  if (both_y) r.y_added = {w};
  r.unwind_replace = std::make_pair(w, keep);
  r.payload = {{"u", u}, {"v", v}, {"w", w}, {"keep", keep}};
  return r;
}

}  // namespace detail

inline WitnessPair run_twinwidth(const XYInstance& inst, const ContractionSequence& seq, int k,
                                 const EngineOptions& opts = {}) {
  detail::require_mode(inst, DominationMode::Black, "twin-width driver");
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "twin-width driver needs k >= 2");
  if (!inst.x_set.empty()) throw Error(ErrorKind::InvalidArgument, "twin-width driver expects X to be empty");
  ContractionSequence checked = seq;
  checked.declared_width = k;
  if (auto err = contraction_sequence_error(inst.graph, checked)) throw Error(ErrorKind::SequenceInvalid, *err);

  Engine engine(WorkState::from(inst), opts);
  std::map<Vertex, Vertex> alias;  // sequence id -> state id, -1 once deleted
  for (Vertex v = 0; v < inst.graph.order(); ++v) alias[v] = v;
  std::size_t next = 0;
  auto done = [](const WorkState& s) {
    for (Vertex v : s.vertices())
      if (!s.in_y(v)) return false;
    return true;
  };
  while (!done(engine.state())) {
    if (auto r = detail::tww_claim(engine.state(), k)) {
      engine.apply(std::move(*r));
      continue;
    }
    bool contracted = false;
    while (!contracted && next < seq.merges.size()) {
      const Merge& m = seq.merges[next++];
      Vertex su = alias.at(m.u), sv = alias.at(m.v);
      bool au = su >= 0 && engine.state().is_alive(su), av = sv >= 0 && engine.state().is_alive(sv);
      if (!au || !av) {
        alias[m.w] = au ? su : av ? sv : -1;
        continue;
      }
      Vertex w = engine.fresh_vertex();
      engine.apply(detail::tww_contract(engine.state(), su, sv, w));
      alias[m.w] = w;
      contracted = true;
      for (Vertex x : engine.state().vertices())
        if (static_cast<int>(engine.state().red_neighbors(x).size()) > k)
          throw Error(ErrorKind::SequenceInvalid, "red degree exceeds k during the run");
    }
    if (!contracted) throw stalled(engine.state(), "twin-width driver");
  }
  return finish_witness(inst, engine, "twin-width", 4LL * k * k);
}

inline WitnessPair run_twinwidth(const Graph& g, const ContractionSequence& seq, int k,
                                 const EngineOptions& opts = {}) {
  const int n = g.order();
  return run_twinwidth(XYInstance::make(g, VertexSet(n), VertexSet(n), DominationMode::Black), seq, k, opts);
}

}  // namespace dompack
