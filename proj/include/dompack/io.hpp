#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dompack/graph.hpp"

namespace dompack {

// graph6: N(n) header followed by the upper triangle in column-major order,
// six bits per byte, each byte offset by 63.

inline std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph decode_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw Error(ErrorKind::Parse, "graph6 byte out of range");

  std::size_t pos = 0;
  auto take = [&](int count) {
    long long value = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= text.size()) throw Error(ErrorKind::Parse, "truncated graph6 header");
      value = (value << 6) | (text[pos++] - 63);
    }
    return value;
  };
  long long n;
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000) throw Error(ErrorKind::Oversize, "graph6 vertex count too large");

  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != nbytes)
    throw Error(ErrorKind::Parse, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                      std::to_string(nbytes));
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  if (nbits % 6 != 0) {
    int byte = text.back() - 63;
    if (byte & ((1 << (6 - nbits % 6)) - 1)) throw Error(ErrorKind::Parse, "nonzero graph6 padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

/// {"n": int, "edges": [[u,v],...], "red_edges": [[u,v],...]}; an edge listed
/// in red_edges is red whether or not it also appears in edges.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json black = nlohmann::json::array();
  nlohmann::json red = nlohmann::json::array();
  for (const auto& e : g.edges()) (e.color == EdgeColor::Red ? red : black).push_back({e.u, e.v});
  nlohmann::json j = {{"n", g.order()}, {"edges", black}};
  if (!red.empty()) j["red_edges"] = red;
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    if (n < 0) throw Error(ErrorKind::Parse, "negative n");
    std::vector<Edge> edges;
    auto read = [&](const char* key, EdgeColor c) {
      if (!j.contains(key)) return;
      for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, std::string("malformed entry in ") + key);
        Vertex u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
          throw Error(ErrorKind::Parse, "bad edge " + e.dump());
        edges.push_back({u, v, c});
      }
    };
    read("edges", EdgeColor::Black);
    read("red_edges", EdgeColor::Red);
    return Graph::from_edges(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, what + ": " + ex.what());
  }
}

/// Reads a graph from a JSON edge list (leading '{') or a graph6 first line.
inline Graph parse_graph_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(ErrorKind::Parse, "empty graph input");
  if (text[first] == '{') return graph_from_json(parse_json_text(text, "graph JSON"));
  std::string line = text.substr(first, text.find('\n', first) - first);
  return decode_graph6(line);
}

inline Graph load_graph(const std::string& path) { return parse_graph_text(read_file(path)); }

}  // namespace dompack
