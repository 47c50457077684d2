#include <gtest/gtest.h>

#include "dompack/constructions.hpp"
#include "dompack/io.hpp"
#include "dompack/samplers.hpp"
#include "dompack/serialize.hpp"

using namespace dompack;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
  EXPECT_EQ(encode_graph6(Graph(1)), "@");
  EXPECT_EQ(encode_graph6(gen_complete(2)), "A_");
  EXPECT_EQ(encode_graph6(gen_complete(3)), "Bw");
  EXPECT_EQ(encode_graph6(gen_path(3)), "Bg");
  EXPECT_EQ(encode_graph6(Graph(63)).substr(0, 4), "~??~");
}

TEST(Graph6, Petersen) {
  Graph g = decode_graph6("IheA@GUAo");
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
  EXPECT_EQ(encode_graph6(g), "IheA@GUAo");
  EXPECT_EQ(decode_graph6(">>graph6<<IheA@GUAo\n"), g);
}

TEST(Graph6, RoundTripRandom) {
  for (int seed = 0; seed < 60; ++seed) {
    Graph g = gen_random_graph(1 + seed * 2, 0.3, seed);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
  }
  Graph big = gen_random_graph(130, 0.05, 9);
  EXPECT_EQ(decode_graph6(encode_graph6(big)), big);
}

TEST(Graph6, Malformed) {
  EXPECT_EQ(kind_of([] { decode_graph6(""); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { decode_graph6("Ihe"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { decode_graph6("A "); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { decode_graph6("A`"); }), ErrorKind::Parse);
}

TEST(GraphJson, RoundTripWithRedEdges) {
  Graph g = gen_cycle(5).delete_edge(0, 1).add_edge(0, 1, EdgeColor::Red);
  auto j = graph_to_json(g);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["red_edges"].size(), 1u);
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_EQ(parse_graph_text(j.dump()), g);
}

TEST(GraphJson, Malformed) {
  EXPECT_EQ(kind_of([] { graph_from_json(nlohmann::json::parse(R"({"edges": []})")); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 2]]})")); }),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[1, 1]]})")); }),
            ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_graph_text("{not json"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_graph_text("  \n"); }), ErrorKind::Parse);
}

TEST(Serialize, WitnessRoundTrip) {
  Graph g = gen_petersen();
  WitnessPair w = construct_generic(g);
  auto j = witness_to_json(w);
  WitnessPair back = witness_from_json(j, g.order());
  EXPECT_EQ(back.d_set, w.d_set);
  EXPECT_EQ(back.p_set, w.p_set);
  EXPECT_EQ(back.certified_constant, w.certified_constant);
  EXPECT_EQ(back.class_tag, w.class_tag);
  EXPECT_EQ(witness_to_json(back)["D"], j["D"]);
  j["D"].push_back(10);
  EXPECT_EQ(kind_of([&] { witness_from_json(j, g.order()); }), ErrorKind::Parse);
}

TEST(Serialize, ExactResultShape) {
  auto inst = XYInstance::make(gen_path(5), VertexSet::of(5, {0}), VertexSet(5));
  auto j = exact_result_to_json(exact_domination(inst), "domination", inst);
  EXPECT_EQ(j["variant"], "domination");
  EXPECT_EQ(j["mode"], "plain");
  EXPECT_EQ(j["value"], 1);
  EXPECT_EQ(j["x"], nlohmann::json::array({0}));
  EXPECT_TRUE(j["y"].empty());
}

TEST(Serialize, CertificatesRoundTrip) {
  auto tw = gen_random_partial_ktree(12, 2, 0.8, 4);
  auto [completion, k] = tw_certificate_from_json(tw_certificate_to_json(tw.completion, tw.k));
  EXPECT_EQ(completion, tw.completion);
  EXPECT_EQ(k, 2);

  ContractionSequence seq = greedy_contraction_sequence(gen_cycle(6));
  auto back = sequence_from_json(sequence_to_json(seq));
  EXPECT_EQ(back.declared_width, seq.declared_width);
  ASSERT_EQ(back.merges.size(), seq.merges.size());
  for (std::size_t i = 0; i < seq.merges.size(); ++i) {
    EXPECT_EQ(back.merges[i].u, seq.merges[i].u);
    EXPECT_EQ(back.merges[i].w, seq.merges[i].w);
  }
  EXPECT_EQ(kind_of([] { sequence_from_json(nlohmann::json::parse(R"({"width": 1, "merges": [[0, 1]]})")); }),
            ErrorKind::Parse);

  auto planar = gen_random_planar(10, 0.2, 3);
  EXPECT_EQ(rotation_from_json(rotation_to_json(planar.rotation)).order, planar.rotation.order);
}

TEST(Serialize, DiskCsv) {
  auto cfg = gen_random_unitdisk(25, 8.0, 2);
  auto back = disks_from_csv(disks_to_csv(cfg));
  ASSERT_EQ(back.centers.size(), cfg.centers.size());
  for (std::size_t i = 0; i < cfg.centers.size(); ++i) {
    EXPECT_EQ(back.centers[i].x, cfg.centers[i].x);
    EXPECT_EQ(back.centers[i].y, cfg.centers[i].y);
  }
  EXPECT_EQ(disks_from_csv(" 1.5 , 2\r\n\n0,0\n").centers.size(), 2u);
  EXPECT_EQ(kind_of([] { disks_from_csv("1.0;2.0\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { disks_from_csv("1.0,abc\n"); }), ErrorKind::Parse);
}

TEST(Serialize, ConvexRoundTrip) {
  auto inst = gen_random_convex(6, 5, 3);
  auto back = convex_from_json(convex_to_json(inst.encoding));
  EXPECT_EQ(back.encoding.x_order, inst.encoding.x_order);
  EXPECT_EQ(back.encoding.intervals, inst.encoding.intervals);
  EXPECT_EQ(back.graph.size(), inst.graph.size());

  auto bad = nlohmann::json::parse(R"({"x_order": [0, 1, 2], "y_neighbors": {"3": [0, 2]}})");
  EXPECT_EQ(kind_of([&] { convex_from_json(bad); }), ErrorKind::EncodingInvalid);
}
