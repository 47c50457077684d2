#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dompack_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Result run(const std::string& args, const std::string& env = "") const {
    std::string cmd = env + " '" DOMPACK_CLI "' " + args + " > '" + path("stdout") + "' 2> '" + path("stderr") + "'";
    int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(path("stdout")), slurp(path("stderr"))};
  }

  static json first_line(const std::string& out) { return json::parse(out.substr(0, out.find('\n'))); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SolveExamples) {
  write("pet.g6", "IheA@GUAo\n");
  auto r = run("solve --variant gamma " + path("pet.g6"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out)["value"], 3);

  r = run("generate --family complete --params n=5");
  ASSERT_EQ(r.code, 0);
  write("k5.g6", r.out);
  r = run("solve --variant rho --y all " + path("k5.g6"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out)["value"], 0);

  write("c4.json", R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})");
  r = run("solve --variant gamma --mode total " + path("c4.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = first_line(r.out);
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["mode"], "total");
}

TEST_F(Cli, SolveWithXAndStdin) {
  auto r = run("solve --variant gamma --x 0 - < /dev/null");
  EXPECT_EQ(r.code, 2);
  write("p4.g6", "Ch\n");
  r = run("solve --variant gamma --x 0 - < '" + path("p4.g6") + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_line(r.out)["x"], json::array({0}));
}

TEST_F(Cli, ErrorExitCodes) {
  EXPECT_EQ(run("solve " + path("missing.g6")).code, 2);
  write("bad.g6", "I!!\n");
  EXPECT_EQ(run("solve " + path("bad.g6")).code, 2);
  EXPECT_EQ(run("solve --variant nope " + path("bad.g6")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  write("pet.g6", "IheA@GUAo\n");
  auto r = run("solve " + path("pet.g6"), "DOMPACK_MAX_N=5");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.err)["error"], "Oversize");
}

TEST_F(Cli, ConstructExamples) {
  write("pet.g6", "IheA@GUAo\n");
  auto r = run("construct --class generic " + path("pet.g6"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto w = first_line(r.out);
  EXPECT_EQ(w["ratio"], "4/1");
  EXPECT_EQ(w["constant"], "4/1");

  r = run("generate --family random-tree --params n=12 seed=3 --format json");
  ASSERT_EQ(r.code, 0);
  write("tree.json", r.out);
  auto tree = json::parse(r.out);
  write("chordal.json", json{{"k", 1}, {"completion", tree}}.dump());
  r = run("construct --class treewidth --certificate " + path("chordal.json") + " " + path("tree.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  w = first_line(r.out);
  EXPECT_EQ(w["constant"], "1/1");
  EXPECT_EQ(w["D"].size(), w["P"].size());
}

TEST_F(Cli, ConstructFailurePaths) {
  auto r = run("generate --family complete --params n=12");
  write("k12.g6", r.out);
  r = run("construct --class planar " + path("k12.g6"));
  EXPECT_EQ(r.code, 4);
  auto err = json::parse(r.err);
  EXPECT_EQ(err["error"], "Stalled");
  EXPECT_TRUE(err.contains("trace"));

  write("c5.g6", "Dhc\n");
  EXPECT_EQ(run("construct --class dh " + path("c5.g6")).code, 4);
  EXPECT_EQ(run("construct --class treewidth " + path("c5.g6")).code, 2);
}

TEST_F(Cli, EveryClassRoundTripsThroughValidate) {
  struct Case {
    std::string cls, family, params, input_ext;
  };
  std::vector<Case> cases = {
      {"generic", "petersen", "", "g6"},
      {"planar", "random-planar", "n=14 seed=2", "g6"},
      {"treewidth", "random-ktree", "n=12 k=2 seed=2", "g6"},
      {"twodeg", "random-twodeg", "n=14 seed=2", "g6"},
      {"twinwidth", "random-graph", "n=8 p=0.3 seed=2", "g6"},
      {"dh", "random-dh", "n=14 seed=2", "g6"},
      {"atfree", "random-interval", "n=14 seed=2", "g6"},
      {"convex", "random-convex", "nx=6 ny=5 seed=2", "json"},
      {"unitdisk", "random-unitdisk", "n=25 box=8 seed=2", "csv"},
  };
  for (const auto& c : cases) {
    std::string input = path(c.cls + "." + c.input_ext);
    std::string cert = path(c.cls + ".cert.json");
    std::string gen = "generate --family " + c.family + (c.params.empty() ? "" : " --params " + c.params);
    if (c.cls == "treewidth" || c.cls == "planar") gen += " --certificate-out " + cert;
    auto r = run(gen);
    ASSERT_EQ(r.code, 0) << c.cls << ": " << r.err;
    write(c.cls + "." + c.input_ext, r.out);

    std::string construct = "construct --class " + c.cls + " ";
    if (c.cls == "treewidth" || c.cls == "planar") construct += "--certificate " + cert + " ";
    if (c.cls == "twinwidth") construct += "--k 3 ";
    r = run(construct + input);
    ASSERT_EQ(r.code, 0) << c.cls << ": " << r.err;
    write(c.cls + ".w.json", r.out);
    auto w = first_line(r.out);
    EXPECT_EQ(w["class"].get<std::string>().empty(), false);

    r = run("validate --what witness " + path(c.cls + ".w.json") + " " + input);
    EXPECT_EQ(r.code, 0) << c.cls << ": " << r.out << r.err;
  }
}

TEST_F(Cli, ValidateRejectsBadWitness) {
  write("pet.g6", "IheA@GUAo\n");
  write("w.json", R"({"class": "generic", "mode": "plain", "constant": "4/1", "additive": 0, "D": [0], "P": [0]})");
  auto r = run("validate --what witness " + path("w.json") + " " + path("pet.g6"));
  EXPECT_EQ(r.code, 5);
  EXPECT_FALSE(r.out.empty() && r.err.empty());
}

TEST_F(Cli, ValidateCertificates) {
  write("c5.g6", "Dhc\n");
  write("seq.json", R"({"width": 1, "merges": [[0, 1, 5], [5, 2, 6], [6, 3, 7], [7, 4, 8]]})");
  EXPECT_EQ(run("validate --what tww-seq " + path("seq.json") + " " + path("c5.g6")).code, 5);
  write("seq2.json", R"({"width": 2, "merges": [[0, 1, 5], [5, 2, 6], [6, 3, 7], [7, 4, 8]]})");
  EXPECT_EQ(run("validate --what tww-seq " + path("seq2.json") + " " + path("c5.g6")).code, 0);

  write("c4.json", R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})");
  write("tw.json", R"({"k": 2, "completion": {"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0],[0,2]]}})");
  EXPECT_EQ(run("validate --what tw-cert " + path("tw.json") + " " + path("c4.json")).code, 0);
  write("tw_bad.json", R"({"k": 2, "completion": {"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}})");
  EXPECT_EQ(run("validate --what tw-cert " + path("tw_bad.json") + " " + path("c4.json")).code, 5);

  write("k4.json", R"({"n": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  write("rot.json", R"({"rotation": [[1,2,3],[0,3,2],[0,1,3],[0,2,1]]})");
  EXPECT_EQ(run("validate --what rotation " + path("rot.json") + " " + path("k4.json")).code, 0);
  write("rot_bad.json", R"({"rotation": [[1,2,3],[0,2,3],[0,1,3],[0,1,2]]})");
  EXPECT_EQ(run("validate --what rotation " + path("rot_bad.json") + " " + path("k4.json")).code, 5);
}

TEST_F(Cli, GenerateExamples) {
  auto r = run("generate --family chained-blocks --params i=2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out[0] - 63, 14);
  r = run("generate --family split --params k=9");
  EXPECT_EQ(r.code, 3);
  r = run("generate --family no-such-family");
  EXPECT_EQ(r.code, 2);
  r = run("families list");
  ASSERT_EQ(r.code, 0);
  EXPECT_GE(json::parse(r.out).size(), 10u);
}

TEST_F(Cli, GenerateSolveForEveryFamily) {
  auto r = run("families list");
  for (const auto& f : json::parse(r.out)) {
    std::string name = f["name"];
    std::string ext = name == "random-unitdisk" ? "csv" : name == "random-convex" ? "json" : "g6";
    r = run("generate --family " + name);
    ASSERT_EQ(r.code, 0) << name << r.err;
    write(name + "." + ext, r.out);
    r = run("solve --variant rho " + path(name + "." + ext));
    EXPECT_EQ(r.code, 0) << name << r.err;
  }
}

TEST_F(Cli, ScanExamples) {
  auto r = run("scan --source enumerate-n 6 --check duality --quiet");
  ASSERT_EQ(r.code, 0) << r.err;
  auto s = json::parse(r.out.substr(r.out.rfind('{', r.out.rfind("\"summary\""))))["summary"];
  EXPECT_EQ(s["violations"], 0);
  EXPECT_EQ(s["graphs"], 32768);

  r = run("scan --source enumerate-n 5 --check treeeq --filter tree");
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int records = 0;
  json summary;
  while (std::getline(lines, line)) {
    auto j = json::parse(line);
    if (j.contains("summary")) {
      summary = j["summary"];
    } else {
      ++records;
      EXPECT_EQ(j["gamma"], j["rho"]);
    }
  }
  EXPECT_EQ(records, 125);  // labeled trees on 5 vertices
  EXPECT_EQ(summary["checked"], 125);
}

TEST_F(Cli, ScanFileWithMalformedLines) {
  write("mix.g6", "IheA@GUAo\nnot-a-graph\nCh\n");
  auto r = run("scan --source file " + path("mix.g6") + " --check henning --quiet");
  ASSERT_EQ(r.code, 0) << r.err;
  auto s = json::parse(r.out.substr(r.out.find("{\"summary\"")))["summary"];
  EXPECT_EQ(s["malformed"], 1);
  EXPECT_EQ(s["equality"], json::array({"IheA@GUAo"}));
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(Cli, ScanParallelMatchesSerial) {
  auto a = run("scan --source enumerate-n 5 --check duality --jobs 1");
  auto b = run("scan --source enumerate-n 5 --check duality --jobs 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, ScanViolationExitsNonzero) {
  // C4 has gamma 2 and rho 1.
  write("c4.g6", "Cr\n");
  auto r = run("scan --source file " + path("c4.g6") + " --check treeeq");
  EXPECT_EQ(r.code, 1);
}
