#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dompack/graph.hpp"

namespace dompack {

// ---------------------------------------------------------------------------
// Geometric and interval encodings

struct Point {
  double x = 0;
  double y = 0;
};

inline double squared_distance(Point a, Point b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Centers of radius-1 disks; disks i and j meet iff their centers are at most 2 apart.
struct DiskConfiguration {
  std::vector<Point> centers;

  Graph intersection_graph() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    const int n = static_cast<int>(centers.size());
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (squared_distance(centers[i], centers[j]) <= 4.0) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
  }
};

/// One side ordered by x_order; each vertex y on the other side sees exactly
/// the x-vertices at positions intervals[y].first..intervals[y].second.
struct ConvexEncoding {
  std::vector<Vertex> x_order;
  std::map<Vertex, std::pair<int, int>> intervals;

  std::vector<int> positions(int n) const {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < x_order.size(); ++i) pos[x_order[i]] = static_cast<int>(i);
    return pos;
  }
};

struct ConvexInstance {
  Graph graph;
  ConvexEncoding encoding;
};

// ---------------------------------------------------------------------------
// Small named graphs

inline Graph gen_path(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph gen_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph gen_complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph gen_complete_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

inline Graph gen_star(int leaves) { return gen_complete_bipartite(1, leaves); }

/// K_n x K_n; cell (i, j) has id i*n + j.
inline Graph gen_rook(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "rook graph needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (k > j) e.emplace_back(i * n + j, i * n + k);
        if (k > i) e.emplace_back(i * n + j, k * n + j);
      }
  return Graph::from_edges(n * n, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph gen_petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
    e.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, e);
}

inline Graph gen_dodecahedron() {
  // Outer 5-cycle, middle 10-cycle, inner 5-cycle.
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5 + 2 * i);
    e.emplace_back(15 + i, 15 + (i + 1) % 5);
    e.emplace_back(15 + i, 5 + 2 * i + 1);
  }
  for (Vertex i = 0; i < 10; ++i) e.emplace_back(5 + i, 5 + (i + 1) % 10);
  return Graph::from_edges(20, e);
}

// ---------------------------------------------------------------------------
// Extremal families

/// Blocks a^j_1..a^j_6 get ids 6(j-1)+0..5; the closing edge is u1 = 6i, u2 = 6i+1.
inline Graph gen_chained_blocks(int i) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "chained blocks need i >= 1");
  if (i > 2000) throw Error(ErrorKind::Oversize, "chained blocks limited to i <= 2000");
  auto a = [](int block, int level) { return 6 * (block - 1) + (level - 1); };
  const Vertex u1 = 6 * i, u2 = 6 * i + 1;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int j = 1; j <= i; ++j) {
    for (int l = 1; l < 6; ++l) e.emplace_back(a(j, l), a(j, l + 1));
    e.emplace_back(a(j, 1), a(j, 5));
    e.emplace_back(a(j, 2), a(j, 6));
    if (j < i) {
      e.emplace_back(a(j, 1), a(j + 1, 3));
      e.emplace_back(a(j, 6), a(j + 1, 4));
    }
  }
  e.emplace_back(u1, u2);
  e.emplace_back(u1, a(1, 3));
  e.emplace_back(u2, a(1, 4));
  e.emplace_back(u1, a(i, 1));
  e.emplace_back(u2, a(i, 6));
  return Graph::from_edges(6 * i + 2, e);
}

namespace detail {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) return out;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

}  // namespace detail

/// Clique C = 0..2k-2; one independent vertex per k-subset of C, in lexicographic order.
inline Graph gen_split(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "split family needs k >= 1");
  if (k > 5) throw Error(ErrorKind::Oversize, "split family limited to k <= 5");
  const int c = 2 * k - 1;
  auto sets = detail::subsets(c, k);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < c; ++i)
    for (Vertex j = i + 1; j < c; ++j) e.emplace_back(i, j);
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int m : sets[s]) e.emplace_back(c + static_cast<Vertex>(s), m);
  return Graph::from_edges(c + static_cast<int>(sets.size()), e);
}

/// A = 0..2k-1, one B vertex per pair of A in lexicographic order, then v adjacent to all of B.
inline Graph gen_threedeg(int k, bool with_apex = true) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "three-degenerate family needs k >= 1");
  if (k > 4) throw Error(ErrorKind::Oversize, "three-degenerate family limited to k <= 4");
  const int a = 2 * k;
  auto pairs = detail::subsets(a, 2);
  const int b = static_cast<int>(pairs.size());
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int s = 0; s < b; ++s) {
    e.emplace_back(a + s, pairs[s][0]);
    e.emplace_back(a + s, pairs[s][1]);
    if (with_apex) e.emplace_back(a + s, a + b);
  }
  return Graph::from_edges(a + b + (with_apex ? 1 : 0), e);
}

// ---------------------------------------------------------------------------
// Seeded random generators. All draws come from one mt19937_64 stream, so a
// seed reproduces the same graph on every platform.

namespace detail {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline bool coin(std::mt19937_64& rng, double p) { return uniform_real(rng, 0, 1) < p; }

}  // namespace detail

/// Uniform labeled tree via a Pruefer sequence.
inline Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  if (n <= 1) return Graph(n);
  if (n == 2) return Graph::from_edges(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> code(n - 2);
  for (auto& c : code) c = detail::uniform(rng, 0, n - 1);
  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int c : code) {
    Vertex leaf = static_cast<Vertex>(std::find(deg.begin(), deg.end(), 1) - deg.begin());
    e.emplace_back(leaf, c);
    --deg[leaf];
    --deg[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) last.push_back(v);
  e.emplace_back(last[0], last[1]);
  return Graph::from_edges(n, e);
}

inline Graph gen_random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (detail::coin(rng, p)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline DiskConfiguration gen_random_unitdisk(int n, double box, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DiskConfiguration cfg;
  for (int i = 0; i < n; ++i) {
    double x = detail::uniform_real(rng, 0, box);
    double y = detail::uniform_real(rng, 0, box);
    cfg.centers.push_back({x, y});
  }
  return cfg;
}

/// X-vertices 0..nx-1 in a shuffled order, Y-vertices nx..nx+ny-1 with random
/// intervals. The first intervals tile the order so no X-vertex is isolated.
inline ConvexInstance gen_random_convex(int nx, int ny, std::uint64_t seed) {
  if (nx < 1 || ny < 1) throw Error(ErrorKind::InvalidArgument, "convex generator needs nx, ny >= 1");
  std::mt19937_64 rng(seed);
  ConvexEncoding enc;
  enc.x_order.resize(nx);
  std::iota(enc.x_order.begin(), enc.x_order.end(), 0);
  for (int i = nx - 1; i > 0; --i) std::swap(enc.x_order[i], enc.x_order[detail::uniform(rng, 0, i)]);

  const int tiles = std::min(nx, ny);
  std::vector<int> cuts;
  for (int p = 1; p < nx; ++p) cuts.push_back(p);
  for (int i = static_cast<int>(cuts.size()) - 1; i > 0; --i) std::swap(cuts[i], cuts[detail::uniform(rng, 0, i)]);
  cuts.resize(tiles - 1);
  std::sort(cuts.begin(), cuts.end());
  int start = 0;
  for (int t = 0; t < tiles; ++t) {
    int end = t + 1 < tiles ? cuts[t] - 1 : nx - 1;
    enc.intervals[nx + t] = {start, end};
    start = end + 1;
  }
  for (int t = tiles; t < ny; ++t) {
    int lo = detail::uniform(rng, 0, nx - 1);
    int hi = detail::uniform(rng, lo, nx - 1);
    enc.intervals[nx + t] = {lo, hi};
  }
  std::vector<std::pair<Vertex, Vertex>> e;
  for (const auto& [y, iv] : enc.intervals)
    for (int p = iv.first; p <= iv.second; ++p) e.emplace_back(enc.x_order[p], y);
  return {Graph::from_edges(nx + ny, e), enc};
}

// ---------------------------------------------------------------------------
// Family metadata for `families list`

inline nlohmann::json families_metadata() {
  using nlohmann::json;
  auto entry = [](std::string name, json params, std::string guarantee, json citations) {
    return json{{"name", std::move(name)}, {"parameters", std::move(params)}, {"guarantees", std::move(guarantee)},
                {"citations", std::move(citations)}};
  };
  json list = json::array();
  list.push_back(entry("chained-blocks", {{"i", 2}}, "6i+2 vertices, max degree 3, gamma = 2i+1, rho = i",
                       json::array()));
  list.push_back(entry("split", {{"k", 2}}, "split graph, gamma = k, rho = 1 (k <= 5)", json::array()));
  list.push_back(entry("threedeg", {{"k", 2}, {"apex", 1}}, "3-degenerate, rho <= 2, gamma >= k (k <= 4)", json::array()));
  list.push_back(entry("rook", {{"n", 3}}, "K_n x K_n, gamma = n, rho = 1", json::array()));
  list.push_back(entry("cycle", {{"n", 7}}, "gamma <= rho + 1, equality iff n = 1, 2 mod 3",
                       {"Henning, Loewenstein, Rautenbach 2011"}));
  list.push_back(entry("path", {{"n", 5}}, "tree, gamma = rho", {"Meir, Moon 1975"}));
  list.push_back(entry("petersen", json::object(), "3-regular, gamma = 3 = 2 rho + 1",
                       {"Henning, Loewenstein, Rautenbach 2011"}));
  list.push_back(entry("dodecahedron", json::object(), "3-regular planar", json::array()));
  list.push_back(entry("random-tree", {{"n", 10}, {"seed", 1}}, "uniform labeled tree, gamma = rho", {"Meir, Moon 1975"}));
  list.push_back(entry("random-unitdisk", {{"n", 30}, {"box", 10.0}, {"seed", 1}}, "unit-disk centers, CSV output", json::array()));
  list.push_back(entry("random-convex", {{"nx", 6}, {"ny", 5}, {"seed", 1}}, "convex bipartite graph with its encoding",
                       json::array()));
  list.push_back(entry("complete", {{"n", 4}}, "K_n, gamma = rho = 1", json::array()));
  list.push_back(entry("complete-bipartite", {{"a", 2}, {"b", 3}}, "K_{a,b}", json::array()));
  list.push_back(entry("star", {{"n", 3}}, "K_{1,n}, gamma = rho = 1", json::array()));
  list.push_back(entry("random-graph", {{"n", 8}, {"p", 0.4}, {"seed", 1}}, "G(n, p)", json::array()));
  list.push_back(entry("random-ktree", {{"n", 10}, {"k", 2}, {"keep", 0.8}, {"seed", 1}},
                       "partial k-tree with its k-tree completion, treewidth <= k", json::array()));
  list.push_back(entry("random-planar", {{"n", 10}, {"drop", 0.2}, {"seed", 1}}, "planar with a rotation system", json::array()));
  list.push_back(entry("random-twodeg", {{"n", 10}, {"seed", 1}}, "2-degenerate", json::array()));
  list.push_back(entry("random-dh", {{"n", 10}, {"seed", 1}}, "connected distance-hereditary", json::array()));
  list.push_back(entry("random-interval", {{"n", 10}, {"seed", 1}}, "connected interval graph, AT-free", json::array()));
  return list;
}

}  // namespace dompack
