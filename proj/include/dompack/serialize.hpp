#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dompack/certificates.hpp"
#include "dompack/engine_core.hpp"
#include "dompack/families.hpp"
#include "dompack/io.hpp"
#include "dompack/oracles.hpp"

namespace dompack {

namespace detail {

template <typename F>
auto parse_guard(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, what + ": " + ex.what());
  }
}

inline VertexSet set_from_json(const nlohmann::json& j, int n, const std::string& what) {
  VertexSet s(n);
  for (const auto& v : j) {
    int id = v.get<int>();
    if (id < 0 || id >= n) throw Error(ErrorKind::Parse, what + " names vertex " + std::to_string(id));
    s.insert(id);
  }
  return s;
}

}  // namespace detail

inline nlohmann::json rule_to_json(const RuleApplication& r) {
  return {{"rule", to_string(r.rule)}, {"payload", r.payload}, {"d", r.unwind_d}, {"p", r.unwind_p}};
}

inline nlohmann::json witness_to_json(const WitnessPair& w) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& r : w.trace) trace.push_back(rule_to_json(r));
  auto ratio = w.achieved_ratio();
  return {{"class", w.class_tag},
          {"mode", to_string(w.mode)},
          {"constant", w.certified_constant.str()},
          {"additive", w.additive},
          {"D", w.d_set.members()},
          {"P", w.p_set.members()},
          {"ratio", ratio ? nlohmann::json(ratio->str()) : nlohmann::json(nullptr)},
          {"details", w.details},
          {"trace", trace}};
}

/// Restores class, mode, constant, additive, D and P; the trace is not re-read.
inline WitnessPair witness_from_json(const nlohmann::json& j, int n) {
  return detail::parse_guard("witness JSON", [&] {
    WitnessPair w;
    w.class_tag = j.at("class").get<std::string>();
    w.mode = parse_mode(j.value("mode", std::string("plain")));
    w.certified_constant = Rational::parse(j.at("constant").get<std::string>());
    w.additive = j.value("additive", 0LL);
    w.d_set = detail::set_from_json(j.at("D"), n, "D");
    w.p_set = detail::set_from_json(j.at("P"), n, "P");
    if (j.contains("details")) w.details = j.at("details");
    return w;
  });
}

inline nlohmann::json exact_result_to_json(const ExactResult& r, const std::string& variant, const XYInstance& inst) {
  return {{"variant", variant},
          {"mode", to_string(inst.mode)},
          {"value", r.value},
          {"witness", r.witness.members()},
          {"x", inst.x_set.members()},
          {"y", inst.y_set.members()},
          {"nodes", r.nodes_explored}};
}

// Treewidth certificate: {"k": k, "completion": <graph JSON>}

inline nlohmann::json tw_certificate_to_json(const Graph& completion, int k) {
  return {{"k", k}, {"completion", graph_to_json(completion)}};
}

inline std::pair<Graph, int> tw_certificate_from_json(const nlohmann::json& j) {
  return detail::parse_guard("treewidth certificate",
                             [&] { return std::make_pair(graph_from_json(j.at("completion")), j.at("k").get<int>()); });
}

// Contraction sequence: {"width": k, "merges": [[u, v, w], ...]}

inline nlohmann::json sequence_to_json(const ContractionSequence& s) {
  nlohmann::json merges = nlohmann::json::array();
  for (const auto& m : s.merges) merges.push_back({m.u, m.v, m.w});
  return {{"width", s.declared_width}, {"merges", merges}};
}

inline ContractionSequence sequence_from_json(const nlohmann::json& j) {
  return detail::parse_guard("contraction sequence", [&] {
    ContractionSequence s;
    s.declared_width = j.at("width").get<int>();
    for (const auto& m : j.at("merges")) {
      if (!m.is_array() || m.size() != 3) throw Error(ErrorKind::Parse, "merge entries are [u, v, w]");
      s.merges.push_back({m[0].get<int>(), m[1].get<int>(), m[2].get<int>()});
    }
    return s;
  });
}

// Rotation system: {"rotation": [[neighbors of 0 in cyclic order], ...]}

inline nlohmann::json rotation_to_json(const RotationSystem& rs) { return {{"rotation", rs.order}}; }

inline RotationSystem rotation_from_json(const nlohmann::json& j) {
  return detail::parse_guard("rotation system", [&] {
    return RotationSystem{j.at("rotation").get<std::vector<std::vector<Vertex>>>()};
  });
}

// Disk configuration CSV: one "x,y" line per center

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string disks_to_csv(const DiskConfiguration& cfg) {
  std::string out;
  for (const auto& c : cfg.centers) out += format_double(c.x) + "," + format_double(c.y) + "\n";
  return out;
}

inline DiskConfiguration disks_from_csv(const std::string& text) {
  DiskConfiguration cfg;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto comma = line.find(',');
    auto number = [&](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      double v = 0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw Error(ErrorKind::Parse, "disk CSV line " + std::to_string(lineno) + ": bad number '" + s + "'");
      return v;
    };
    if (comma == std::string::npos) throw Error(ErrorKind::Parse, "disk CSV line " + std::to_string(lineno) + ": expected x,y");
    cfg.centers.push_back({number(line.substr(0, comma)), number(line.substr(comma + 1))});
  }
  return cfg;
}

// Convex encoding: {"x_order": [...], "y_neighbors": {"y": [x, ...]}}

inline nlohmann::json convex_to_json(const ConvexEncoding& enc) {
  nlohmann::json ys = nlohmann::json::object();
  for (const auto& [y, iv] : enc.intervals) {
    std::vector<Vertex> xs(enc.x_order.begin() + iv.first, enc.x_order.begin() + iv.second + 1);
    ys[std::to_string(y)] = xs;
  }
  return {{"x_order", enc.x_order}, {"y_neighbors", ys}};
}

/// Builds the graph from the encoding; neighbor lists must be consecutive in x_order.
inline ConvexInstance convex_from_json(const nlohmann::json& j) {
  return detail::parse_guard("convex encoding", [&] {
    ConvexEncoding enc;
    enc.x_order = j.at("x_order").get<std::vector<Vertex>>();
    int n = 0;
    for (Vertex x : enc.x_order) n = std::max(n, x + 1);
    std::vector<std::pair<Vertex, std::vector<Vertex>>> ys;
    for (const auto& [key, xs] : j.at("y_neighbors").items()) {
      Vertex y = 0;
      auto res = std::from_chars(key.data(), key.data() + key.size(), y);
      if (res.ec != std::errc() || res.ptr != key.data() + key.size() || y < 0)
        throw Error(ErrorKind::Parse, "bad y id '" + key + "'");
      ys.emplace_back(y, xs.get<std::vector<Vertex>>());
      n = std::max(n, y + 1);
    }
    for (Vertex x : enc.x_order)
      if (x < 0) throw Error(ErrorKind::Parse, "negative x id");
    auto pos = enc.positions(n);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& [y, xs] : ys) {
      if (xs.empty()) throw Error(ErrorKind::EncodingInvalid, "y " + std::to_string(y) + " has no neighbors");
      int lo = static_cast<int>(enc.x_order.size()), hi = -1;
      for (Vertex x : xs) {
        if (x < 0 || x >= n || pos[x] < 0)
          throw Error(ErrorKind::EncodingInvalid, "y " + std::to_string(y) + " lists a non-x vertex");
        lo = std::min(lo, pos[x]);
        hi = std::max(hi, pos[x]);
        edges.emplace_back(x, y);
      }
      if (hi - lo + 1 != static_cast<int>(xs.size()))
        throw Error(ErrorKind::EncodingInvalid, "neighbors of y " + std::to_string(y) + " are not consecutive");
      enc.intervals[y] = {lo, hi};
    }
    return ConvexInstance{Graph::from_edges(n, edges), enc};
  });
}

}  // namespace dompack
