#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dompack/engine_core.hpp"
#include "dompack/families.hpp"
#include "dompack/graph.hpp"
#include "dompack/oracles.hpp"
#include "dompack/recognizers.hpp"

namespace dompack {

namespace detail {

/// Adds vertices of `order` to `packing` whenever they stay at distance >= 3 from it.
inline void extend_packing(const Graph& g, const std::vector<Vertex>& order, VertexSet& packing) {
  VertexSet blocked = closed_neighborhood(g, closed_neighborhood(g, packing));
  for (Vertex v : order) {
    if (blocked.contains(v)) continue;
    packing.insert(v);
    blocked |= closed_neighborhood(g, g.closed_neighbors(v));
  }
}

inline std::vector<Vertex> by_degree(const Graph& g) {
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  return order;
}

/// Plain-mode witness with the final soundness and budget checks.
inline WitnessPair plain_witness(const Graph& g, std::string tag, VertexSet d, VertexSet p, Rational constant,
                                 long long additive = 0) {
  WitnessPair w;
  w.class_tag = std::move(tag);
  w.d_set = std::move(d);
  w.p_set = std::move(p);
  w.certified_constant = constant;
  w.additive = additive;
  auto inst = XYInstance::plain(g);
  if (!check_xy_dominating(inst, w.d_set))
    throw Error(ErrorKind::GuaranteeViolated, w.class_tag + " construction does not dominate");
  if (!check_xy_packing(inst, w.p_set))
    throw Error(ErrorKind::GuaranteeViolated, w.class_tag + " construction is not a packing");
  if (!w.within_budget())
    throw Error(ErrorKind::GuaranteeViolated, w.class_tag + " construction exceeds its budget");
  return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generic bound: a maximal packing and its closed neighborhood

inline WitnessPair construct_generic(const Graph& g) {
  VertexSet p(g.order());
  detail::extend_packing(g, detail::by_degree(g), p);
  return detail::plain_witness(g, "generic", closed_neighborhood(g, p), p, Rational(std::max(1, g.max_degree() + 1)));
}

// ---------------------------------------------------------------------------
// AT-free graphs: a shortest path between a dominating pair

/// u and v with no z such that u, v lie in one component of G - N[z] while
/// both avoid N[z]. Then every u-v path dominates.
inline bool is_dominating_pair(const Graph& g, Vertex u, Vertex v) {
  for (Vertex z = 0; z < g.order(); ++z) {
    VertexSet blocked = g.closed_neighbors(z);
    if (blocked.contains(u) || blocked.contains(v)) continue;
    VertexSet seen = blocked;
    std::vector<Vertex> stack{u};
    seen.insert(u);
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      if (a == v) return false;
      for (Vertex b : g.neighbors(a).members())
        if (!seen.contains(b)) {
          seen.insert(b);
          stack.push_back(b);
        }
    }
  }
  return true;
}

/// First dominating pair in lexicographic order; K_1 gives (0, 0).
inline std::pair<Vertex, Vertex> find_dominating_pair(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorKind::NotFound, "graph is empty or disconnected");
  if (g.order() == 1) return {0, 0};
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (is_dominating_pair(g, u, v)) return {u, v};
  throw Error(ErrorKind::NotFound, "no dominating pair");
}

inline WitnessPair construct_atfree(const Graph& g) {
  auto [u, v] = find_dominating_pair(g);
  std::vector<Vertex> path = u == v ? std::vector<Vertex>{u} : shortest_path(g, u, v);
  const int p = static_cast<int>(path.size());
  VertexSet d = VertexSet::of(g.order(), path), packing(g.order());
  for (int i = 0; i < std::max(1, p / 3); ++i) packing.insert(path[3 * i]);
  auto w = detail::plain_witness(g, "at-free", d, packing, Rational(3), 2);
  w.details = {{"pair", {u, v}}};
  return w;
}

// ---------------------------------------------------------------------------
// Convex bipartite graphs: x-vertices are points, y-vertices are intervals

/// (d1): every x outside D lies in the interval of some y in D.
inline bool convex_d1(const ConvexEncoding& enc, const VertexSet& d) {
  for (std::size_t p = 0; p < enc.x_order.size(); ++p) {
    if (d.contains(enc.x_order[p])) continue;
    bool covered = false;
    for (const auto& [y, iv] : enc.intervals)
      covered = covered || (d.contains(y) && iv.first <= static_cast<int>(p) && static_cast<int>(p) <= iv.second);
    if (!covered) return false;
  }
  return true;
}

/// (d2): every interval of a y outside D contains a point of D.
inline bool convex_d2(const ConvexEncoding& enc, const VertexSet& d) {
  for (const auto& [y, iv] : enc.intervals) {
    if (d.contains(y)) continue;
    bool hit = false;
    for (int p = iv.first; p <= iv.second; ++p) hit = hit || d.contains(enc.x_order[p]);
    if (!hit) return false;
  }
  return true;
}

struct ConvexOptions {
  std::optional<Vertex> seed;  // forced first packing vertex
};

/// Maximal packing, then swaps y -> y' with interval(y') strictly inside
/// interval(y) until none remain. Each swap is followed by re-extension, so
/// (|P|, -total length) increases lexicographically and the loop terminates.
inline WitnessPair construct_convex(const Graph& g, const ConvexEncoding& enc, const ConvexOptions& opts = {}) {
  if (!is_convex_order(g, enc)) throw Error(ErrorKind::EncodingInvalid, "encoding does not match the graph");
  const int n = g.order();
  const auto order = detail::by_degree(g);
  VertexSet p(n);
  if (opts.seed) {
    if (!g.has_vertex(*opts.seed)) throw Error(ErrorKind::InvalidArgument, "seed is not a vertex");
    p.insert(*opts.seed);
  }
  detail::extend_packing(g, order, p);

  auto strictly_inside = [](std::pair<int, int> a, std::pair<int, int> b) {
    return b.first <= a.first && a.second <= b.second && a != b;
  };
  int swaps = 0;
  for (bool again = true; again;) {
    again = false;
    for (const auto& [y, iy] : enc.intervals) {
      if (!p.contains(y)) continue;
      for (const auto& [z, iz] : enc.intervals)
        if (!p.contains(z) && strictly_inside(iz, iy)) {
          p.erase(y);
          p.insert(z);
          detail::extend_packing(g, order, p);
          ++swaps;
          again = true;
          break;
        }
      if (again) break;
    }
  }

  VertexSet d = p;
  for (Vertex v : p.members()) {
    if (auto it = enc.intervals.find(v); it != enc.intervals.end()) {
      d.insert(enc.x_order[it->second.first]);
      d.insert(enc.x_order[it->second.second]);
      continue;
    }
    const int pos = enc.positions(n)[v];
    std::optional<std::pair<Vertex, std::pair<int, int>>> first, last;
    for (const auto& [y, iv] : enc.intervals) {
      if (iv.first > pos || pos > iv.second) continue;
      if (!first || iv.first < first->second.first) first = {y, iv};
      if (!last || iv.second > last->second.second) last = {y, iv};
    }
    if (first) d.insert(first->first);
    if (last) d.insert(last->first);
  }
  if (!convex_d1(enc, d) || !convex_d2(enc, d))
    throw Error(ErrorKind::GuaranteeViolated, "convex construction misses (d1) or (d2)");
  auto w = detail::plain_witness(g, "convex", d, p, Rational(3));
  w.details = {{"swaps", swaps}};
  return w;
}

// ---------------------------------------------------------------------------
// Unit disk graphs

/// Triangular lattice with spacing sqrt(3): its Voronoi hexagons have
/// circumradius 1, so unit disks at the lattice points cover the plane. Keeps
/// the points whose hexagon meets the disk of the given radius at the origin.
inline std::vector<Point> covering_points(double radius) {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "negative radius");
  const double s3 = std::sqrt(3.0);
  const double pi = std::acos(-1.0);
  std::array<Point, 6> corner;
  for (int i = 0; i < 6; ++i) corner[i] = {std::cos(pi / 6 + i * pi / 3), std::sin(pi / 6 + i * pi / 3)};
  auto cell_distance = [&](Point c) {
    bool inside = true;
    double best = INFINITY;
    for (int i = 0; i < 6; ++i) {
      Point a{c.x + corner[i].x, c.y + corner[i].y}, b{c.x + corner[(i + 1) % 6].x, c.y + corner[(i + 1) % 6].y};
      double ex = b.x - a.x, ey = b.y - a.y;
      if (ex * (-a.y) - ey * (-a.x) < 0) inside = false;
      double t = std::clamp((-a.x * ex - a.y * ey) / (ex * ex + ey * ey), 0.0, 1.0);
      best = std::min(best, std::hypot(a.x + t * ex, a.y + t * ey));
    }
    return inside ? 0.0 : best;
  };
  const int reach = static_cast<int>(std::ceil((radius + 1) / 1.5)) + 1;
  std::vector<Point> out;
  for (int b = -reach; b <= reach; ++b)
    for (int a = -2 * reach; a <= 2 * reach; ++a) {
      Point c{s3 * a + s3 / 2 * b, 1.5 * b};
      if (std::hypot(c.x, c.y) > radius + 1) continue;
      if (cell_distance(c) <= radius + 1e-9) out.push_back(c);
    }
  return out;
}

struct CoverageReport {
  bool covered = true;
  long long samples = 0;
  double worst = 0;  // largest squared distance from a sample to its nearest point
};

/// Grid check that unit disks at `points` cover the disk of the given radius.
inline CoverageReport verify_covering(const std::vector<Point>& points, double radius, double step = 0.01,
                                      double tolerance = 1e-9) {
  CoverageReport rep;
  const long long steps = std::llround(radius / step);
  for (long long i = -steps; i <= steps; ++i)
    for (long long j = -steps; j <= steps; ++j) {
      Point q{static_cast<double>(i) * step, static_cast<double>(j) * step};
      if (q.x * q.x + q.y * q.y > radius * radius + tolerance) continue;
      ++rep.samples;
      double best = INFINITY;
      for (const Point& c : points) best = std::min(best, squared_distance(q, c));
      rep.worst = std::max(rep.worst, best);
      if (best > 1 + tolerance) rep.covered = false;
    }
  return rep;
}

/// Maximal packing P; for each packed disk, every translated covering point
/// picks the lowest-id disk containing it. |D| <= c_cov |P| where c_cov is the
/// number of covering points.
inline WitnessPair construct_unitdisk(const DiskConfiguration& cfg) {
  const Graph g = cfg.intersection_graph();
  const auto cover = covering_points(5);
  const int c_cov = static_cast<int>(cover.size());
  VertexSet p(g.order());
  detail::extend_packing(g, detail::by_degree(g), p);
  VertexSet d(g.order());
  for (Vertex v : p.members())
    for (const Point& c : cover) {
      Point q{cfg.centers[v].x + c.x, cfg.centers[v].y + c.y};
      for (Vertex u = 0; u < g.order(); ++u)
        if (squared_distance(q, cfg.centers[u]) <= 1) {
          d.insert(u);
          break;
        }
    }
  auto w = detail::plain_witness(g, "unit-disk", d, p, Rational(c_cov));
  w.details = {{"c_cov", c_cov}};
  return w;
}

}  // namespace dompack
