#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coedit/cli.hpp"
#include "coedit/cotree.hpp"
#include "coedit/errors.hpp"
#include "coedit/genbench.hpp"
#include "coedit/io.hpp"
#include "oracles.hpp"

using namespace coedit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "coedit");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "coedit_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string graph_file(const std::string& name, const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return write_file(name, os.str());
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("edge list parsing") {
  std::istringstream in("# a path\n4 3\n0 1\n\n1 2\n# middle\n2 3\n");
  CHECK(read_edge_list(in) == oracle::path(4));

  auto fails_on = [](const std::string& text, std::size_t line) {
    std::istringstream is(text);
    try {
      read_edge_list(is);
      return false;
    } catch (const ParseError& e) {
      return e.line() == line;
    }
  };
  CHECK(fails_on("4\n", 1));
  CHECK(fails_on("x 3\n", 1));
  CHECK(fails_on("3 1\n0 0\n", 2));
  CHECK(fails_on("3 2\n0 1\n1 0\n", 3));
  CHECK(fails_on("3 1\n0 3\n", 2));
  CHECK(fails_on("3 2\n0 1\n", 2));
  CHECK(fails_on("3 1\n0 1\n1 2\n", 3));
  CHECK(fails_on("3 1\n0 -1\n", 2));
  CHECK(fails_on("", 1));
}

TEST_CASE("edge list round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_graph(15, 0.3, seed);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);
  }
}

TEST_CASE("edit sets") {
  const Graph p4 = oracle::path(4);
  std::ostringstream os;
  write_edit_set(os, p4, {{2, 1}, {0, 3}});
  CHECK(os.str() == "+ 0 3\n- 1 2\n");
  std::istringstream in(os.str());
  CHECK(read_edit_set(in, p4) == EditSet{{0, 3}, {1, 2}});
  std::istringstream bad_range("+ 0 9\n");
  CHECK_THROWS_AS(read_edit_set(bad_range, p4), ParseError);
  std::istringstream bad_sign("+ 0 1\n");
  CHECK_THROWS_AS(read_edit_set(bad_sign, p4), ParseError);
  std::istringstream dup("- 0 1\n- 1 0\n");
  CHECK_THROWS_AS(read_edit_set(dup, p4), ParseError);
}

TEST_CASE("tree JSON round trips") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(3 + seed % 8, 0.5, seed);
    const auto t = build_mdt(g);
    CHECK(mdtree_from_json(to_json(t)) == t);
    const Graph c = random_cograph({1 + seed % 12, seed, 3, 0});
    const auto ct = build_cotree(c);
    CHECK(cotree_from_json(to_json(ct)) == ct);
    CHECK(mdtree_from_json(Json::parse(to_json(t).dump())) == t);
  }
  const auto p4 = to_json(build_mdt(oracle::path(4)));
  CHECK(p4.dump() ==
        R"({"type":"prime","vertices":[0,1,2,3],"children":[{"type":"leaf","vertex":0},{"type":"leaf","vertex":1},)"
        R"({"type":"leaf","vertex":2},{"type":"leaf","vertex":3}],"quotient_edges":[[0,1],[1,2],[2,3]]})");
  CHECK_THROWS_AS(mdtree_from_json(Json::parse(R"({"type":"series","children":[{"type":"leaf","vertex":0}]})")),
                  InputError);
  CHECK_THROWS_AS(cotree_from_json(Json::parse(R"({"type":"prime","children":[]})")), InputError);
  CHECK_THROWS_AS(mdtree_from_json(Json::parse(R"({"type":"leaf"})")), InputError);
}

}

TEST_SUITE("cli") {

TEST_CASE("recognize") {
  const auto p4 = cli({"recognize", graph_file("p4.txt", oracle::path(4))});
  CHECK(p4.code == 0);
  CHECK(p4.out == "not-cograph\nP4: 0 1 2 3\n");
  const auto k3 = cli({"recognize", graph_file("k3.txt", oracle::complete(3))});
  CHECK(k3.code == 0);
  CHECK(k3.out.rfind("cograph\n", 0) == 0);
  const auto tree = Json::parse(k3.out.substr(8));
  CHECK(tree["type"] == "series");
  CHECK(tree["children"].size() == 3);
  const auto bad = cli({"recognize", write_file("bad.txt", "3\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 1") != std::string::npos);
  CHECK(cli({"recognize"}).code == 1);
  CHECK(cli({}).code == 1);
  CHECK(cli({"recognize", scratch("missing.txt").string()}).code == 1);
}

TEST_CASE("decompose") {
  const auto ex = cli({"decompose", graph_file("ex.txt", oracle::make(4, {{2, 3}}))});
  REQUIRE(ex.code == 0);
  const auto t = Json::parse(ex.out);
  CHECK(t["type"] == "parallel");
  CHECK(t["children"][2]["type"] == "series");
  CHECK(t["children"][2]["vertices"] == Json::parse("[2,3]"));
  const auto p4 = Json::parse(cli({"decompose", graph_file("p4.txt", oracle::path(4))}).out);
  CHECK(p4["type"] == "prime");
  CHECK(p4["quotient_edges"] == Json::parse("[[0,1],[1,2],[2,3]]"));
  CHECK(cli({"decompose", graph_file("k1.txt", Graph(1))}).out == "{\n  \"type\": \"leaf\",\n  \"vertex\": 0\n}\n");
}

TEST_CASE("edit") {
  const auto p4 = graph_file("p4.txt", oracle::path(4));
  const auto oracle_run = cli({"edit", p4, "--method", "oracle"});
  CHECK(oracle_run.code == 0);
  CHECK(oracle_run.out == "- 0 1\nedits: 1\n");
  const auto c5 = graph_file("c5.txt", oracle::cycle(5));
  const auto out = scratch("c5.edits").string();
  const auto trace = scratch("c5.trace.json").string();
  const auto exact = cli({"edit", c5, "--method", "exact", "--out", out, "--trace", trace});
  CHECK(exact.code == 0);
  CHECK(exact.out == "edits: 2\n");
  CHECK(read_file(out).size() == 12);
  const auto tj = Json::parse(read_file(trace));
  CHECK(tj.contains("records"));
  CHECK(tj["records"][0].contains("sources"));
  const auto heur = cli({"edit", c5, "--trace", trace});
  CHECK(heur.out.find("edits: 2\n") != std::string::npos);

  const auto cograph = graph_file("cograph.txt", random_cograph({8, 2, 3, 0}));
  for (std::string m : {"heuristic", "exact", "oracle"}) {
    const auto empty = scratch("empty.edits").string();
    const auto r = cli({"edit", cograph, "--method", m, "--out", empty});
    CHECK(r.out == "edits: 0\n");
    CHECK(read_file(empty).empty());
  }

  const auto big = graph_file("big.txt", random_graph(30, 0.5, 4));
  const auto cap = cli({"edit", big, "--method", "exact"});
  CHECK(cap.code == 1);
  CHECK(cap.err.find("cap") != std::string::npos);
  CHECK(cli({"edit", big, "--method", "oracle"}).code == 1);
  CHECK(cli({"edit", p4, "--method", "magic"}).code == 1);
}

TEST_CASE("verify") {
  const auto p4 = graph_file("p4.txt", oracle::path(4));
  const auto good = cli({"verify", p4, write_file("p4.edits", "- 0 1\n")});
  CHECK(good.code == 0);
  CHECK(good.out ==
        "cograph: true\nedits: 1\nmodule_preserving: true\ntrace_records: 1\ntrace_union_equals_edits: true\n");
  const auto none = cli({"verify", p4, write_file("none.edits", "")});
  CHECK(none.code == 0);
  CHECK(none.out.rfind("cograph: false\n", 0) == 0);
  CHECK(cli({"verify", p4, write_file("range.edits", "+ 0 4\n")}).code == 2);
  const auto big = oracle::blow_up(oracle::path(4), 2);
  const auto lost = cli({"verify", graph_file("big.txt", big), write_file("lost.edits", "- 0 2\n- 0 3\n- 1 2\n- 1 3\n- 4 6\n")});
  CHECK(lost.out.find("module_preserving: false\n") != std::string::npos);
}

TEST_CASE("spider") {
  const auto p4 = cli({"spider", graph_file("p4.txt", oracle::path(4))});
  CHECK(p4.out == "thin\nK: 1 2\nS: 0 3\nR: \nlegs: 1-0 2-3\n");
  CHECK(cli({"spider", graph_file("c5.txt", oracle::cycle(5))}).out == "not-spider\n");
}

TEST_CASE("generate") {
  CHECK(cli({"generate", "--n", "1"}).out == "1 0\n");
  const auto path = scratch("gen.txt").string();
  CHECK(cli({"generate", "--n", "20", "--seed", "9", "--flips", "3", "--out", path}).code == 0);
  CHECK(read_edge_list_file(path) == bench_instance({20, 9, 4, 3}));
  CHECK(cli({"generate", "--n", "3", "--flips", "4"}).code == 1);
}

TEST_CASE("bench") {
  const auto r = cli({"bench", "--n", "6", "--trials", "3", "--flips", "0", "--methods", "heuristic,exact"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line) && !line.empty()) {
    CHECK(line.find(",0,true,0,") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 6);
  CHECK(cli({"bench", "--methods", "nope"}).code == 1);
}

}
