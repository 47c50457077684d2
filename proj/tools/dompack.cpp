#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dompack/certificates.hpp"
#include "dompack/constructions.hpp"
#include "dompack/engine.hpp"
#include "dompack/families.hpp"
#include "dompack/io.hpp"
#include "dompack/oracles.hpp"
#include "dompack/recognizers.hpp"
#include "dompack/samplers.hpp"
#include "dompack/serialize.hpp"

using namespace dompack;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kParse = 2, kOversize = 3, kConstruction = 4, kValidation = 5 };

struct Failure {
  int code;
  std::string kind;
  std::string message;
  json extra = json::object();
};

std::string read_input(const std::string& path) {
  if (path != "-") return read_file(path);
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Graph from graph6, edge-list JSON, convex JSON or a disk CSV (by extension).
Graph load_any_graph(const std::string& path) {
  std::string text = read_input(path);
  if (ends_with(path, ".csv")) return disks_from_csv(text).intersection_graph();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = parse_json_text(text, path);
    if (j.contains("x_order")) return convex_from_json(j).graph;
    if (j.contains("graph")) return graph_from_json(j.at("graph"));
    return graph_from_json(j);
  }
  return parse_graph_text(text);
}

json load_json(const std::string& path) { return parse_json_text(read_input(path), path); }

VertexSet parse_vertex_list(const std::string& spec, int n) {
  if (spec.empty()) return VertexSet(n);
  if (spec == "all") return VertexSet::full(n);
  VertexSet s(n);
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0 || v >= n) throw std::invalid_argument(item);
      s.insert(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "bad vertex '" + item + "' in list '" + spec + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return s;
}

int exit_code_for(ErrorKind kind, int fallback) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument: return kParse;
    case ErrorKind::Oversize: return kOversize;
    default: return fallback;
  }
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string input;
  std::string variant = "gamma";
  std::string mode = "plain";
  std::string x, y;
};

void cmd_solve(const SolveArgs& a) {
  Graph g = load_any_graph(a.input);
  DominationMode mode = parse_mode(a.mode);
  auto inst = XYInstance::make(mode == DominationMode::Black ? g : g.uncolored(), parse_vertex_list(a.x, g.order()),
                               parse_vertex_list(a.y, g.order()), mode);
  ExactResult r = a.variant == "gamma" ? exact_domination(inst) : exact_packing(inst);
  emit(exact_result_to_json(r, a.variant, inst));
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string input;
  std::string cls;
  std::string certificate;
  std::optional<int> k;
};

WitnessPair construct(const ConstructArgs& a, std::vector<RuleApplication>& partial) {
  EngineOptions opts;
  opts.trace_sink = &partial;
  const std::string& c = a.cls;
  if (c == "unitdisk") return construct_unitdisk(disks_from_csv(read_input(a.input)));
  if (c == "convex") {
    auto ci = convex_from_json(load_json(a.input));
    return construct_convex(ci.graph, ci.encoding);
  }
  Graph g = load_any_graph(a.input);
  if (c == "generic") return construct_generic(g.uncolored());
  if (c == "atfree") return construct_atfree(g.uncolored());
  if (c == "twodeg") return run_twodeg(g.uncolored(), opts);
  if (c == "dh") return run_distance_hereditary(g.uncolored(), opts);
  if (c == "planar") {
    if (a.certificate.empty()) return run_planar(g.uncolored(), nullptr, opts);
    RotationSystem rs = rotation_from_json(load_json(a.certificate));
    return run_planar(g.uncolored(), &rs, opts);
  }
  if (c == "treewidth") {
    if (!a.certificate.empty()) {
      auto [completion, k] = tw_certificate_from_json(load_json(a.certificate));
      return run_treewidth(g.uncolored(), completion, a.k.value_or(k), opts);
    }
    if (!a.k) throw Error(ErrorKind::InvalidArgument, "treewidth needs --certificate or --k");
    auto completion = brute_force_tw_certificate(g.uncolored(), *a.k);
    if (!completion) throw Error(ErrorKind::CertificateInvalid, "no certificate of width " + std::to_string(*a.k));
    return run_treewidth(g.uncolored(), *completion, *a.k, opts);
  }
  if (c == "twinwidth") {
    if (!a.certificate.empty()) {
      auto seq = sequence_from_json(load_json(a.certificate));
      return run_twinwidth(g, seq, a.k.value_or(std::max(2, seq.declared_width)), opts);
    }
    const int k = a.k.value_or(2);
    std::optional<ContractionSequence> seq;
    if (g.order() <= 8)
      seq = brute_force_tww_sequence(g, k);
    else
      seq = greedy_contraction_sequence(g);
    if (!seq || seq->declared_width > k)
      throw Error(ErrorKind::SequenceInvalid, "no contraction sequence of width " + std::to_string(k));
    return run_twinwidth(g, *seq, k, opts);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown class '" + c + "'");
}

void cmd_construct(const ConstructArgs& a) {
  std::vector<RuleApplication> partial;
  try {
    emit(witness_to_json(construct(a, partial)));
  } catch (const Error& e) {
    json trace = json::array();
    for (const auto& r : partial) trace.push_back(rule_to_json(r));
    throw Failure{exit_code_for(e.kind(), kConstruction), std::string(to_string(e.kind())), e.what(),
                  {{"trace", trace}}};
  }
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string family;
  std::vector<std::string> params;
  std::string format = "graph6";
  std::string certificate_out;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

void cmd_generate(const GenerateArgs& a) {
  json meta;
  for (const auto& f : families_metadata())
    if (f.at("name") == a.family) meta = f;
  if (meta.is_null()) throw Error(ErrorKind::InvalidArgument, "unknown family '" + a.family + "'");
  json p = meta.at("parameters");
  for (const auto& kv : a.params) {
    auto eq = kv.find('=');
    std::string key = kv.substr(0, eq);
    if (eq == std::string::npos || !p.contains(key))
      throw Error(ErrorKind::InvalidArgument, "bad parameter '" + kv + "' for " + a.family);
    json parsed = parse_json_text(kv.substr(eq + 1), "parameter " + key);
    if (!parsed.is_number()) throw Error(ErrorKind::InvalidArgument, "parameter " + key + " must be a number");
    p[key] = parsed;
  }
  auto num = [&](const char* key) { return p.at(key).get<int>(); };
  auto real = [&](const char* key) { return p.at(key).get<double>(); };
  auto seed = [&] { return p.at("seed").get<std::uint64_t>(); };

  std::optional<json> certificate;
  Graph g;
  const std::string& f = a.family;
  if (f == "random-unitdisk") {
    std::cout << disks_to_csv(gen_random_unitdisk(num("n"), real("box"), seed()));
    return;
  }
  if (f == "random-convex") {
    emit(convex_to_json(gen_random_convex(num("nx"), num("ny"), seed()).encoding));
    return;
  }
  if (f == "chained-blocks") g = gen_chained_blocks(num("i"));
  else if (f == "split") g = gen_split(num("k"));
  else if (f == "threedeg") g = gen_threedeg(num("k"), num("apex") != 0);
  else if (f == "rook") g = gen_rook(num("n"));
  else if (f == "cycle") g = gen_cycle(num("n"));
  else if (f == "path") g = gen_path(num("n"));
  else if (f == "petersen") g = gen_petersen();
  else if (f == "dodecahedron") g = gen_dodecahedron();
  else if (f == "complete") g = gen_complete(num("n"));
  else if (f == "complete-bipartite") g = gen_complete_bipartite(num("a"), num("b"));
  else if (f == "star") g = gen_star(num("n"));
  else if (f == "random-tree") g = gen_random_tree(num("n"), seed());
  else if (f == "random-graph") g = gen_random_graph(num("n"), real("p"), seed());
  else if (f == "random-twodeg") g = gen_random_twodeg(num("n"), seed());
  else if (f == "random-dh") g = gen_random_distance_hereditary(num("n"), seed());
  else if (f == "random-interval") g = gen_random_interval(num("n"), seed());
  else if (f == "random-ktree") {
    auto t = gen_random_partial_ktree(num("n"), num("k"), real("keep"), seed());
    g = t.graph;
    certificate = tw_certificate_to_json(t.completion, t.k);
  } else if (f == "random-planar") {
    auto s = gen_random_planar(num("n"), real("drop"), seed());
    g = s.graph;
    certificate = rotation_to_json(s.rotation);
  } else {
    throw Error(ErrorKind::InvalidArgument, "family '" + f + "' has no generator");
  }

  if (!a.certificate_out.empty()) {
    if (!certificate) throw Error(ErrorKind::InvalidArgument, "family '" + f + "' has no certificate");
    write_text(a.certificate_out, certificate->dump() + "\n");
  }
  if (a.format == "graph6") {
    std::cout << encode_graph6(g) << '\n';
  } else if (a.format == "json") {
    json out = graph_to_json(g);
    if (certificate) out = {{"graph", out}, {"certificate", *certificate}};
    emit(out);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + a.format + "'");
  }
}

// ---------------------------------------------------------------------------
// validate

struct ValidateArgs {
  std::string what;
  std::string file;
  std::string graph;
};

std::optional<std::string> witness_error(const Graph& g, const WitnessPair& w) {
  auto inst = XYInstance::make(w.mode == DominationMode::Black ? g : g.uncolored(), VertexSet(g.order()),
                               VertexSet(g.order()), w.mode);
  if (!check_xy_dominating(inst, w.d_set)) return "D does not dominate the graph";
  if (!check_xy_packing(inst, w.p_set)) return "P is not a packing";
  if (!w.within_budget())
    return "|D| = " + std::to_string(w.d_set.size()) + " exceeds " + w.certified_constant.str() + " * |P| + " +
           std::to_string(w.additive) + " with |P| = " + std::to_string(w.p_set.size());
  return std::nullopt;
}

void cmd_validate(const ValidateArgs& a) {
  Graph g = load_any_graph(a.graph);
  json doc = load_json(a.file);
  std::optional<std::string> err;
  if (a.what == "witness") {
    err = witness_error(g, witness_from_json(doc, g.order()));
  } else if (a.what == "tw-cert") {
    auto [completion, k] = tw_certificate_from_json(doc);
    err = tw_certificate_error(g.uncolored(), completion, k);
  } else if (a.what == "tww-seq") {
    err = contraction_sequence_error(g, sequence_from_json(doc));
  } else if (a.what == "rotation") {
    err = rotation_planarity_error(g.uncolored(), rotation_from_json(doc));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown --what '" + a.what + "'");
  }
  if (err) throw Failure{kValidation, "ValidationFailed", *err};
  emit({{"valid", true}, {"what", a.what}});
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
  std::vector<std::string> source;
  std::string filter = "all";
  std::string check = "duality";
  int jobs = 1;
  bool quiet = false;
};

struct ScanItem {
  std::string graph6;
  Graph graph;
};

struct ScanResult {
  bool skipped = false;
  bool ok = true;
  bool equality = false;
  json record;
};

json class_flags(const Graph& g) {
  json flags = json::array();
  const bool connected = is_connected(g);
  if (connected) flags.push_back("connected");
  if (g.max_degree() <= 3) flags.push_back("subcubic");
  if (connected && g.size() == g.order() - 1) flags.push_back("tree");
  if (degeneracy(g) <= 2) flags.push_back("2-degenerate");
  if (recognize_chordal(g)) flags.push_back("chordal");
  if (recognize_split(g)) flags.push_back("split");
  if (connected && recognize_distance_hereditary(g)) flags.push_back("distance-hereditary");
  if (recognize_at_free(g)) flags.push_back("at-free");
  return flags;
}

ScanResult scan_one(const ScanItem& item, const ScanArgs& a) {
  const Graph& g = item.graph;
  ScanResult res;
  const bool connected = is_connected(g);
  if ((a.filter == "subcubic" && !(connected && g.max_degree() <= 3)) ||
      (a.filter == "tree" && !(connected && g.size() == g.order() - 1))) {
    res.skipped = true;
    return res;
  }
  const int gm = gamma(g), rh = rho(g);
  if (a.check == "duality") {
    res.ok = gm >= rh;
  } else if (a.check == "henning") {
    res.ok = gm <= 2 * rh + 1;
    res.equality = gm == 2 * rh + 1;
  } else {
    res.ok = gm == rh;
  }
  res.record = {{"graph6", item.graph6},
                {"n", g.order()},
                {"m", g.size()},
                {"gamma", gm},
                {"rho", rh},
                {"ratio", rh > 0 ? json(Rational(gm, rh).str()) : json(nullptr)},
                {"flags", class_flags(g)},
                {"ok", res.ok}};
  if (a.check == "henning") res.record["equality"] = res.equality;
  return res;
}

/// Runs scan_one over a batch with `jobs` workers; results keep input order.
std::vector<ScanResult> scan_batch(const std::vector<ScanItem>& items, const ScanArgs& a) {
  std::vector<ScanResult> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) out[i] = scan_one(items[i], a);
  };
  const int jobs = std::max(1, a.jobs);
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

void cmd_scan(const ScanArgs& a) {
  if (a.check != "duality" && a.check != "henning" && a.check != "treeeq")
    throw Error(ErrorKind::InvalidArgument, "unknown check '" + a.check + "'");
  if (a.filter != "all" && a.filter != "subcubic" && a.filter != "tree")
    throw Error(ErrorKind::InvalidArgument, "unknown filter '" + a.filter + "'");
  if (a.source.size() != 2) throw Error(ErrorKind::InvalidArgument, "--source takes 'enumerate-n N' or 'file PATH'");

  long long graphs = 0, checked = 0, violations = 0, malformed = 0;
  std::vector<std::string> equality;
  constexpr std::size_t kBatch = 1 << 14;
  std::vector<ScanItem> batch;
  auto flush = [&] {
    for (auto& r : scan_batch(batch, a)) {
      ++graphs;
      if (r.skipped) continue;
      ++checked;
      if (!r.ok) {
        ++violations;
        std::cerr << "counterexample: " << r.record.at("graph6").get<std::string>() << '\n';
      }
      if (r.equality) equality.push_back(r.record.at("graph6").get<std::string>());
      if (!a.quiet || !r.ok || r.equality) emit(r.record);
    }
    batch.clear();
  };

  if (a.source[0] == "enumerate-n") {
    int n = 0;
    try {
      n = std::stoi(a.source[1]);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "bad vertex count '" + a.source[1] + "'");
    }
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
    if (n > 7) throw Error(ErrorKind::Oversize, "built-in enumeration stops at n = 7");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> e;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1u) e.push_back(pairs[i]);
      Graph g = Graph::from_edges(n, e);
      batch.push_back({encode_graph6(g), g});
      if (batch.size() == kBatch) flush();
    }
  } else if (a.source[0] == "file") {
    std::istringstream in(read_input(a.source[1]));
    std::string line;
    for (long long lineno = 1; std::getline(in, line); ++lineno) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        batch.push_back({line, decode_graph6(line)});
      } catch (const Error& e) {
        ++malformed;
        std::cerr << "line " << lineno << ": " << e.what() << '\n';
        continue;
      }
      if (batch.size() == kBatch) flush();
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown source '" + a.source[0] + "'");
  }
  flush();
  std::sort(equality.begin(), equality.end());
  emit({{"summary",
         {{"check", a.check},
          {"filter", a.filter},
          {"graphs", graphs},
          {"checked", checked},
          {"violations", violations},
          {"equality", equality},
          {"malformed", malformed}}}});
  if (violations > 0) throw Failure{kViolation, "Violation", std::to_string(violations) + " violations"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination and packing toolkit"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Exact gamma or rho with X, Y and mode");
  s->add_option("input", solve.input, "graph6, edge-list JSON, convex JSON or disk CSV ('-' for stdin)")->required();
  s->add_option("--variant", solve.variant)->check(CLI::IsMember({"gamma", "rho"}));
  s->add_option("--mode", solve.mode)->check(CLI::IsMember({"plain", "total", "black"}));
  s->add_option("--x", solve.x, "comma-separated vertices or 'all'");
  s->add_option("--y", solve.y, "comma-separated vertices or 'all'");

  ConstructArgs cons;
  auto* c = app.add_subcommand("construct", "Certified dominating set and packing");
  c->add_option("input", cons.input)->required();
  c->add_option("--class", cons.cls)
      ->required()
      ->check(CLI::IsMember(
          {"planar", "treewidth", "twodeg", "twinwidth", "dh", "atfree", "convex", "unitdisk", "generic"}));
  c->add_option("--certificate", cons.certificate, "completion, contraction sequence or rotation JSON");
  c->add_option("--k", cons.k, "width parameter");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Emit a family member");
  g->add_option("--family", gen.family)->required();
  g->add_option("--params", gen.params, "key=value pairs");
  g->add_option("--format", gen.format)->check(CLI::IsMember({"graph6", "json"}));
  g->add_option("--certificate-out", gen.certificate_out, "write the family's certificate here");

  ValidateArgs val;
  auto* v = app.add_subcommand("validate", "Check a witness or certificate against a graph");
  v->add_option("--what", val.what)->required()->check(CLI::IsMember({"witness", "tw-cert", "tww-seq", "rotation"}));
  v->add_option("file", val.file)->required();
  v->add_option("graph", val.graph)->required();

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "Check duality, the subcubic bound or tree equality over many graphs");
  sc->add_option("--source", scan.source, "enumerate-n N | file PATH")->required()->expected(2);
  sc->add_option("--filter", scan.filter)->check(CLI::IsMember({"all", "subcubic", "tree"}));
  sc->add_option("--check", scan.check)->check(CLI::IsMember({"duality", "henning", "treeeq"}));
  sc->add_option("--jobs", scan.jobs)->check(CLI::PositiveNumber);
  sc->add_flag("--quiet", scan.quiet, "print only violations, equality cases and the summary");

  auto* fam = app.add_subcommand("families", "Family metadata");
  auto* fam_list = fam->add_subcommand("list", "List generators with default parameters");
  fam->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*s) cmd_solve(solve);
    if (*c) cmd_construct(cons);
    if (*g) cmd_generate(gen);
    if (*v) cmd_validate(val);
    if (*sc) cmd_scan(scan);
    if (*fam_list) emit(families_metadata());
  } catch (const Failure& f) {
    json err = {{"error", f.kind}, {"message", f.message}};
    err.update(f.extra);
    std::cerr << err.dump() << '\n';
    return f.code;
  } catch (const Error& e) {
    std::cerr << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return exit_code_for(e.kind(), *v ? kValidation : kConstruction);
  }
  return kOk;
}
