#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dompack/certificates.hpp"
#include "dompack/families.hpp"
#include "dompack/graph.hpp"

namespace dompack {

// Seeded samplers for graph classes handled by the drivers. Each returns the
// certificate the matching driver needs.

struct TreewidthSample {
  Graph graph;
  Graph completion;  // a k-tree containing graph
  int k = 0;
};

/// Random k-tree on n vertices with each edge kept with probability keep.
inline TreewidthSample gen_random_partial_ktree(int n, int k, double keep, std::uint64_t seed) {
  if (n < 0 || k < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 0 and k >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> full;
  std::vector<std::vector<Vertex>> cliques;
  const int base = std::min(n, k + 1);
  std::vector<Vertex> first;
  for (Vertex v = 0; v < base; ++v) {
    for (Vertex u : first) full.emplace_back(u, v);
    first.push_back(v);
  }
  if (base == k + 1) cliques.push_back(first);
  for (Vertex v = base; v < n; ++v) {
    auto c = cliques[detail::uniform(rng, 0, static_cast<int>(cliques.size()) - 1)];
    c.erase(c.begin() + detail::uniform(rng, 0, k));
    for (Vertex u : c) full.emplace_back(u, v);
    c.push_back(v);
    cliques.push_back(c);
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto e : full)
    if (detail::coin(rng, keep)) kept.push_back(e);
  return {Graph::from_edges(n, kept), Graph::from_edges(n, full), k};
}

/// Each vertex picks up to two earlier neighbors, so the reverse order peels at degree <= 2.
inline Graph gen_random_twodeg(int n, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v < n; ++v) {
    int want = detail::uniform(rng, 0, 2);
    Vertex a = detail::uniform(rng, 0, v - 1);
    if (want >= 1) e.emplace_back(a, v);
    if (want == 2 && v >= 2) {
      Vertex b = detail::uniform(rng, 0, v - 2);
      if (b >= a) ++b;
      e.emplace_back(b, v);
    }
  }
  return Graph::from_edges(n, e);
}

struct PlanarSample {
  Graph graph;
  RotationSystem rotation;
};

/// Stacked triangulation (repeated insertion into a random inner face) with
/// each edge dropped with probability drop. The rotation is tracked while stacking.
inline PlanarSample gen_random_planar(int n, double drop, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> rot(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < std::min(n, 3); ++v)
    for (Vertex u = 0; u < v; ++u) {
      edges.emplace_back(u, v);
      rot[u].push_back(v);
      rot[v].push_back(u);
    }
  if (n >= 3) rot[0] = {1, 2}, rot[1] = {2, 0}, rot[2] = {0, 1};
  std::vector<std::array<Vertex, 3>> faces;
  if (n >= 3) faces.push_back({0, 1, 2});
  // In a counter-clockwise face (a, b, c), c directly follows b in the rotation at a.
  auto insert_after = [&](Vertex at, Vertex after, Vertex v) {
    auto& r = rot[at];
    r.insert(std::find(r.begin(), r.end(), after) + 1, v);
  };
  for (Vertex v = 3; v < n; ++v) {
    std::size_t fi = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<int>(faces.size()) - 1));
    auto [a, b, c] = faces[fi];
    insert_after(a, b, v);
    insert_after(b, c, v);
    insert_after(c, a, v);
    rot[v] = {a, b, c};
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    faces[fi] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto [u, v] : edges) {
    if (!detail::coin(rng, drop)) {
      kept.emplace_back(u, v);
      continue;
    }
    std::erase(rot[u], v);
    std::erase(rot[v], u);
  }
  return {Graph::from_edges(n, kept), RotationSystem{rot}};
}

/// Connected distance-hereditary graph grown by pendant, true-twin and false-twin additions.
inline Graph gen_random_distance_hereditary(int n, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> nb(n);
  for (Vertex v = 1; v < n; ++v) {
    Vertex u = detail::uniform(rng, 0, v - 1);
    int op = detail::uniform(rng, 0, 2);
    if (op == 2 && nb[u].empty()) op = 1;
    if (op == 0) {
      nb[v] = {u};
    } else {
      nb[v] = nb[u];
      if (op == 1) nb[v].push_back(u);
    }
    for (Vertex w : nb[v]) nb[w].push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : nb[v])
      if (w < v) e.emplace_back(w, v);
  return Graph::from_edges(n, e);
}

/// Connected interval graph: each left end lies inside the union drawn so far.
inline Graph gen_random_interval(int n, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> iv;
  int left = 0, reach = 0;
  for (Vertex v = 0; v < n; ++v) {
    left = v == 0 ? 0 : detail::uniform(rng, left, reach);
    int right = left + detail::uniform(rng, 0, 4);
    iv.emplace_back(left, right);
    reach = std::max(reach, right);
  }
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (iv[u].second >= iv[v].first) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace dompack
