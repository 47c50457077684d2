#include <gtest/gtest.h>

#include <cmath>

#include "dompack/constructions.hpp"
#include "dompack/samplers.hpp"
#include "support.hpp"

using namespace dompack;

namespace {

// For every z with u, v outside N[z]: u and v are in different components of G - N[z].
bool ref_dominating_pair(const Graph& g, Vertex u, Vertex v) {
  const int n = g.order();
  for (Vertex z = 0; z < n; ++z) {
    if (z == u || z == v || g.adjacent(z, u) || g.adjacent(z, v)) continue;
    std::uint32_t keep = 0;
    for (Vertex a = 0; a < n; ++a)
      if (a != z && !g.adjacent(a, z)) keep |= 1u << a;
    std::vector<Vertex> ids;
    Graph h = ref::induced(g, keep, &ids);
    auto d = ref::distances(h);
    auto iu = std::find(ids.begin(), ids.end(), u) - ids.begin();
    auto iv = std::find(ids.begin(), ids.end(), v) - ids.begin();
    if (d[iu][iv] >= 0) return false;
  }
  return true;
}

void expect_plain_sound(const Graph& g, const WitnessPair& w) {
  EXPECT_TRUE(ref::dominates(g, DominationMode::Plain, 0, 0, ref::mask_of(w.d_set)));
  EXPECT_TRUE(ref::is_packing(g, 0, 0, ref::mask_of(w.p_set)));
  EXPECT_TRUE(w.within_budget());
}

ConvexEncoding encoding(std::vector<Vertex> x_order, std::map<Vertex, std::pair<int, int>> intervals) {
  ConvexEncoding enc;
  enc.x_order = std::move(x_order);
  enc.intervals = std::move(intervals);
  return enc;
}

Graph graph_of(const ConvexEncoding& enc, int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (const auto& [y, iv] : enc.intervals)
    for (int p = iv.first; p <= iv.second; ++p) e.emplace_back(enc.x_order[p], y);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST(Generic, Examples) {
  auto w = construct_generic(gen_cycle(6));
  EXPECT_EQ(w.p_set.size(), 2);
  EXPECT_EQ(w.d_set.size(), 6);
  EXPECT_EQ(*w.achieved_ratio(), Rational(3));
  EXPECT_EQ(w.certified_constant, Rational(3));

  for (int n = 1; n <= 6; ++n) {
    w = construct_generic(gen_complete(n));
    EXPECT_EQ(w.p_set.size(), 1);
    EXPECT_EQ(w.d_set.size(), n);
  }

  w = construct_generic(gen_petersen());
  EXPECT_EQ(w.p_set.size(), 1);
  EXPECT_EQ(w.d_set.size(), 4);
  EXPECT_LE(gamma(gen_petersen()), 4);
}

TEST(Generic, RandomGraphs) {
  for (int seed = 0; seed < 100; ++seed) {
    Graph g = gen_random_graph(3 + seed % 12, 0.3, seed);
    auto w = construct_generic(g);
    expect_plain_sound(g, w);
    EXPECT_LE(w.d_set.size(), (g.max_degree() + 1) * w.p_set.size());
  }
}

TEST(DominatingPair, Examples) {
  EXPECT_TRUE(is_dominating_pair(gen_path(5), 0, 4));
  EXPECT_TRUE(ref_dominating_pair(gen_path(5), 0, 4));
  EXPECT_TRUE(is_dominating_pair(gen_cycle(4), 0, 2));
  EXPECT_TRUE(is_dominating_pair(gen_cycle(4), 1, 3));
  auto [u, v] = find_dominating_pair(gen_cycle(6));
  EXPECT_TRUE(ref_dominating_pair(gen_cycle(6), u, v));
  EXPECT_FALSE(is_dominating_pair(gen_cycle(7), 0, 1));
  EXPECT_FALSE(ref_dominating_pair(gen_cycle(7), 0, 1));
}

TEST(DominatingPair, NotFound) {
  try {
    find_dominating_pair(Graph(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFound);
  }
  EXPECT_THROW(find_dominating_pair(Graph(0)), Error);
}

TEST(DominatingPair, AgreesWithReference) {
  for (int seed = 0; seed < 150; ++seed) {
    Graph g = gen_random_graph(4 + seed % 6, 0.35, seed);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) ASSERT_EQ(is_dominating_pair(g, u, v), ref_dominating_pair(g, u, v));
  }
}

TEST(AtFree, Examples) {
  Graph p7 = gen_path(7);
  auto w = construct_atfree(p7);
  // (0, 5) is already a dominating pair of P7 and comes first lexicographically.
  EXPECT_EQ(w.details["pair"], nlohmann::json::array({0, 5}));
  EXPECT_EQ(w.d_set.size(), 6);
  EXPECT_EQ(w.p_set.members(), (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(w.additive, 2);

  for (int n = 2; n <= 6; ++n) {
    w = construct_atfree(gen_complete(n));
    EXPECT_EQ(w.d_set.size(), 2);
    EXPECT_EQ(w.p_set.size(), 1);
    EXPECT_EQ(*w.achieved_ratio(), Rational(2));
  }

  w = construct_atfree(gen_cycle(5));
  EXPECT_EQ(w.d_set.size(), 3);
  EXPECT_EQ(w.p_set.size(), 1);

  w = construct_atfree(Graph(1));
  EXPECT_EQ(w.d_set.size(), 1);
  EXPECT_EQ(w.p_set.size(), 1);
}

TEST(AtFree, IntervalGraphs) {
  for (int seed = 0; seed < 100; ++seed) {
    Graph g = gen_random_interval(4 + seed % 11, seed);
    auto w = construct_atfree(g);
    expect_plain_sound(g, w);
    EXPECT_LE(w.d_set.size(), 3 * w.p_set.size() + 2);
    auto [u, v] = find_dominating_pair(g);
    EXPECT_TRUE(ref_dominating_pair(g, u, v));
    // D is a shortest path, so it has exactly dist(u, v) + 1 vertices.
    EXPECT_EQ(w.d_set.size(), ref::distances(g)[u][v] + 1);
  }
}

TEST(Convex, CompleteBipartite) {
  auto enc = encoding({0, 1}, {{2, {0, 1}}, {3, {0, 1}}, {4, {0, 1}}});
  Graph g = graph_of(enc, 5);
  auto w = construct_convex(g, enc);
  expect_plain_sound(g, w);
  EXPECT_LE(w.d_set.size(), 3 * w.p_set.size());
  EXPECT_LE(gamma(g), 3 * rho(g));
  EXPECT_TRUE(convex_d1(enc, w.d_set));
  EXPECT_TRUE(convex_d2(enc, w.d_set));
}

TEST(Convex, SingleEdge) {
  auto enc = encoding({0}, {{1, {0, 0}}});
  Graph g = graph_of(enc, 2);
  auto w = construct_convex(g, enc);
  EXPECT_EQ(w.p_set.size(), 1);
  EXPECT_LE(w.d_set.size(), 2);
}

TEST(Convex, NestedIntervalSwap) {
  // y6 sees every x, y7 sees only positions 2..3, so y7 sits strictly inside y6.
  auto enc = encoding({0, 1, 2, 3, 4, 5}, {{6, {0, 5}}, {7, {2, 3}}});
  Graph g = graph_of(enc, 8);
  ConvexOptions opts;
  opts.seed = 6;
  auto w = construct_convex(g, enc, opts);
  EXPECT_GE(w.details["swaps"].get<int>(), 1);
  EXPECT_FALSE(w.p_set.contains(6));
  EXPECT_TRUE(w.p_set.contains(7));
  expect_plain_sound(g, w);
  EXPECT_LE(w.d_set.size(), 3 * w.p_set.size());
}

TEST(Convex, EncodingMismatch) {
  auto enc = encoding({0, 1, 2}, {{3, {0, 1}}});
  Graph g = graph_of(enc, 4).add_edge(2, 3);
  try {
    construct_convex(g, enc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EncodingInvalid);
  }
}

TEST(Convex, RandomInstances) {
  int swaps = 0;
  for (int seed = 0; seed < 200; ++seed) {
    auto inst = gen_random_convex(2 + seed % 7, 2 + seed % 6, seed);
    ConvexOptions opts;
    if (seed % 2) {
      int longest = -1;
      for (const auto& [y, iv] : inst.encoding.intervals)
        if (iv.second - iv.first > longest) {
          longest = iv.second - iv.first;
          opts.seed = y;
        }
    }
    auto w = construct_convex(inst.graph, inst.encoding, opts);
    swaps += w.details["swaps"].get<int>();
    expect_plain_sound(inst.graph, w);
    EXPECT_LE(w.d_set.size(), 3 * w.p_set.size());
    // Fixed point: no packed interval strictly contains an unpacked one.
    for (const auto& [y, iy] : inst.encoding.intervals)
      for (const auto& [z, iz] : inst.encoding.intervals)
        if (w.p_set.contains(y) && !w.p_set.contains(z)) {
          EXPECT_FALSE(iy.first <= iz.first && iz.second <= iy.second && iy != iz);
        }
  }
  EXPECT_GT(swaps, 0);
}

TEST(Covering, SmallRadii) {
  auto c0 = covering_points(0);
  EXPECT_EQ(c0.size(), 1u);
  EXPECT_TRUE(verify_covering(c0, 0).covered);
  auto c1 = covering_points(1);
  EXPECT_LE(c1.size(), 7u);
  EXPECT_TRUE(verify_covering(c1, 1).covered);
  EXPECT_THROW(covering_points(-1), Error);
}

TEST(Covering, RadiusFive) {
  auto pts = covering_points(5);
  EXPECT_EQ(pts.size(), 43u);
  auto rep = verify_covering(pts, 5, 0.05);
  EXPECT_TRUE(rep.covered);
  EXPECT_LE(rep.worst, 1.0 + 1e-9);
  // Independent Monte Carlo check, including points on the boundary circle.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(0, 2 * std::acos(-1.0)), rad(0, 1);
  for (int i = 0; i < 50000; ++i) {
    double t = ang(rng), r = i % 10 == 0 ? 5.0 : 5.0 * std::sqrt(rad(rng));
    double qx = r * std::cos(t), qy = r * std::sin(t);
    double best = 1e18;
    for (const auto& c : pts) best = std::min(best, (qx - c.x) * (qx - c.x) + (qy - c.y) * (qy - c.y));
    ASSERT_LE(best, 1.0 + 1e-9) << qx << "," << qy;
  }
}

TEST(UnitDisk, Examples) {
  DiskConfiguration one{{{0, 0}}};
  auto w = construct_unitdisk(one);
  EXPECT_EQ(w.d_set.members(), std::vector<Vertex>{0});
  EXPECT_EQ(w.p_set.members(), std::vector<Vertex>{0});

  DiskConfiguration three{{{0, 0}, {1, 0}, {0.5, 0.5}}};
  w = construct_unitdisk(three);
  EXPECT_EQ(w.p_set.size(), 1);
  EXPECT_LE(w.d_set.size(), 43);
  expect_plain_sound(three.intersection_graph(), w);
  EXPECT_EQ(w.details["c_cov"], 43);
}

TEST(UnitDisk, IntersectionGraph) {
  DiskConfiguration cfg{{{0, 0}, {2, 0}, {4.0001, 0}}};
  Graph g = cfg.intersection_graph();
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(UnitDisk, RandomConfigurations) {
  for (int seed = 0; seed < 40; ++seed) {
    auto cfg = gen_random_unitdisk(50, 20, seed);
    Graph g = cfg.intersection_graph();
    auto w = construct_unitdisk(cfg);
    EXPECT_TRUE(check_xy_dominating(XYInstance::plain(g), w.d_set));
    EXPECT_TRUE(check_xy_packing(XYInstance::plain(g), w.p_set));
    EXPECT_LE(w.d_set.size(), 43 * w.p_set.size());
  }
  for (int seed = 0; seed < 40; ++seed) {
    auto cfg = gen_random_unitdisk(14, 5, seed);
    Graph g = cfg.intersection_graph();
    EXPECT_LE(ref::gamma(g), 32 * ref::rho(g));
    expect_plain_sound(g, construct_unitdisk(cfg));
  }
}
