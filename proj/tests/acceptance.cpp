// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coedit/cli.hpp"
#include "coedit/errors.hpp"
#include "coedit/exact.hpp"
#include "coedit/genbench.hpp"
#include "coedit/heuristic.hpp"
#include "coedit/io.hpp"
#include "coedit/spider.hpp"
#include "edit_props.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace coedit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass)
      first_failure = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// n <= 8: perturbed cographs on even seeds, G(n, 0.5) on odd seeds.
Graph small_instance(std::uint64_t seed) {
  const std::size_t n = 4 + seed % 5;
  if (seed % 2)
    return random_graph(n, 0.5, seed);
  return bench_instance({n, seed, 2 + seed % 3, 1 + (seed / 2) % 4});
}

struct Solved {
  Graph g;
  EditSet exact;
};

// Exact solutions from criterion 1, reused by 3 to 5.
std::vector<Solved> solved;

Outcome oracle_optimality() {
  Outcome out;
  const auto t0 = Clock::now();
  std::size_t terminated = 0;
  std::vector<std::size_t> by_size(5);
  const std::size_t total = 300;
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    const Graph g = small_instance(seed);
    const EditSet f = exact_edit(g);
    solved.push_back({g, f});
    if (!is_cograph(apply(g, f)))
      out.fail("seed " + std::to_string(seed) + ": exact output is not a cograph");
    const auto best = oracle_exact_edit(g, 4);
    if (!best)
      continue;
    ++terminated;
    ++by_size[best->size()];
    if (best->size() != f.size())
      out.fail("seed " + std::to_string(seed) + ": exact " + std::to_string(f.size()) + " vs oracle " +
               std::to_string(best->size()));
  }
  const double secs = seconds_since(t0);
  if (secs >= 60)
    out.fail("took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << total << " graphs, oracle answered " << terminated << " (optimum 0..4:";
  for (auto c : by_size)
    os << " " << c;
  os << "), " << secs << " s";
  out.detail = os.str();
  return out;
}

Outcome soundness() {
  Outcome out;
  const auto t0 = Clock::now();
  const std::vector<std::size_t> sizes{8, 12, 16, 24, 32, 48, 64};
  const std::size_t total = 1000;
  std::size_t exact_runs = 0;
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    const std::size_t n = sizes[seed % sizes.size()];
    Graph g(0);
    if (seed % 3 == 0)
      g = random_graph(n, 0.5, seed);
    else if (seed % 3 == 1)
      g = random_graph(n, 0.1 + 0.1 * static_cast<double>(seed % 8), seed);
    else
      g = bench_instance({n, seed, 2 + seed % 4, 1 + seed % (n / 2)});
    const auto h = heuristic_edit(g);
    if (!is_cograph(apply(g, h.edits)) || apply(g, h.edits) != h.graph)
      out.fail("seed " + std::to_string(seed) + ": heuristic output is not a cograph");
    try {
      const EditSet f = exact_edit(g);
      ++exact_runs;
      if (!is_cograph(apply(g, f)))
        out.fail("seed " + std::to_string(seed) + ": exact output is not a cograph");
    } catch (const CapacityError&) {
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 120)
    out.fail("took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << total << " heuristic runs up to n = 64, " << exact_runs << " exact runs within capacity, " << secs << " s";
  out.detail = os.str();
  return out;
}

Outcome per_solution(const std::function<std::optional<std::string>(const Graph&, const EditSet&)>& check,
                     const std::string& what) {
  Outcome out;
  for (std::size_t i = 0; i < solved.size(); ++i)
    if (auto bad = check(solved[i].g, solved[i].exact))
      out.fail("instance " + std::to_string(i) + ": " + *bad);
  out.detail = std::to_string(solved.size()) + " " + what;
  return out;
}

Outcome md_correctness() {
  Outcome out;
  const std::size_t total = 300;
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    const std::size_t n = 1 + seed % 10;
    Graph g(0);
    if (seed % 3 == 0)
      g = random_graph(n, 0.5, seed);
    else if (seed % 3 == 1)
      g = random_graph(n, 0.25, seed);
    else
      g = bench_instance({n, seed, 3, std::min<std::size_t>(seed % 3, n * (n - 1) / 2)});
    if (auto bad = props::md_failure(g))
      out.fail("seed " + std::to_string(seed) + ": " + *bad);
  }
  out.detail = std::to_string(total) + " graphs with n <= 10";
  return out;
}

Outcome spider_scheme() {
  Outcome out;
  std::size_t shapes = 0;
  for (std::size_t k = 2; k <= 3; ++k)
    for (std::size_t r = 0; r <= 2; ++r)
      for (bool thin : {true, false})
        for (bool head_edge : {false, true}) {
          if (head_edge && r < 2)
            continue;
          Graph g = oracle::spider(k, r, thin, head_edge ? std::initializer_list<Edge>{{0, 1}}
                                                         : std::initializer_list<Edge>{});
          // Also a relabelled copy, so the shape is not found by position.
          std::vector<Vertex> perm(g.order());
          for (Vertex v = 0; v < g.order(); ++v)
            perm[v] = g.order() - 1 - v;
          for (const Graph& h : {g, oracle::relabel(g, perm)}) {
            ++shapes;
            const std::string name = "k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                     (thin ? " thin" : " thick") + (head_edge ? " head-edge" : "");
            const auto d = recognize_spider(h);
            if (!d) {
              out.fail(name + ": not recognized");
              continue;
            }
            const EditSet f = edit_spider(h, *d);
            const auto best = oracle_exact_edit(h, 5);
            if (f.size() != k - 1 || !best || best->size() != k - 1 || !is_cograph(apply(h, f)))
              out.fail(name + ": spider edit " + std::to_string(f.size()) + ", oracle " +
                       (best ? std::to_string(best->size()) : "none"));
          }
        }
  const Graph p4 = oracle::path(4);
  const auto spider_path = edit_spider(p4, *recognize_spider(p4)).size();
  const auto exact_path = exact_edit(p4).size();
  const auto heuristic_path = heuristic_edit(p4).edits.size();
  const auto oracle_path = oracle_exact_edit(p4, 4)->size();
  if (spider_path != 1 || exact_path != 1 || heuristic_path != 1 || oracle_path != 1)
    out.fail("P4 edits: spider " + std::to_string(spider_path) + ", exact " + std::to_string(exact_path) +
             ", heuristic " + std::to_string(heuristic_path) + ", oracle " + std::to_string(oracle_path));
  out.detail = std::to_string(shapes) + " spiders, P4 = 1 on every path";
  return out;
}

Outcome named_instances() {
  Outcome out;
  struct Named {
    std::string name;
    Graph g;
    std::size_t optimum;
  };
  const std::vector<Named> cases{{"P4", oracle::path(4), 1},
                                 {"C5", oracle::cycle(5), 2},
                                 {"blown-up P4", oracle::blow_up(oracle::path(4), 2), 4}};
  std::ostringstream os;
  for (const auto& c : cases) {
    const auto best = oracle_exact_edit(c.g, 4);
    const auto ex = exact_edit(c.g).size();
    const auto he = heuristic_edit(c.g).edits.size();
    if (!best || best->size() != c.optimum || ex != c.optimum || he != c.optimum)
      out.fail(c.name + ": oracle " + (best ? std::to_string(best->size()) : "none") + ", exact " +
               std::to_string(ex) + ", heuristic " + std::to_string(he));
    os << c.name << " " << ex << "/" << he << " ";
  }
  out.detail = os.str() + "(exact/heuristic)";
  return out;
}

Outcome three_way_merge() {
  Outcome out;
  std::size_t triples = 0;
  Rng rng(2024);
  for (std::uint64_t seed = 0; triples < 100; ++seed) {
    const std::size_t n = 6 + seed % 5;
    const Graph g = seed % 2 ? random_graph(n, 0.5, seed) : bench_instance({n, seed, 3, 2 + seed % 3});
    const auto t = build_mdt(g);
    for (const auto& node : t.nodes) {
      if (node.kind != MdKind::Prime || node.children.size() < 4 || triples == 100)
        continue;
      const auto picks = rng.sample(node.children.size(), 3);
      std::vector<VertexList> sources;
      for (auto i : picks)
        sources.push_back(t.nodes[node.children[i]].vertices);
      ++triples;
      if (auto bad = props::three_way_merge_failure(g, sources))
        out.fail("seed " + std::to_string(seed) + ": " + *bad);
    }
  }
  out.detail = std::to_string(triples) + " triples, 6 orders each";
  return out;
}

std::string run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"coedit"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Drops the wall_ms column from the per-run rows.
std::string without_timing(const std::string& report) {
  std::istringstream in(report);
  std::string line, out;
  bool rows = true;
  while (std::getline(in, line)) {
    if (line.empty())
      rows = false;
    if (rows && line.find(',') != std::string::npos)
      line.erase(line.rfind(','));
    out += line + "\n";
  }
  return out;
}

Outcome determinism() {
  Outcome out;
  const auto dir = std::filesystem::temp_directory_path() / "coedit_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t compared = 0;
  for (std::uint64_t seed : {1, 7, 42}) {
    const auto input = (dir / ("g" + std::to_string(seed) + ".txt")).string();
    run({"generate", "--n", "24", "--seed", std::to_string(seed), "--flips", "6", "--out", input});
    for (std::string method : {"heuristic", "exact"}) {
      std::string first;
      for (int rep = 0; rep < 2; ++rep) {
        const auto edits = dir / "edits.txt";
        const auto trace = dir / "trace.json";
        std::string all = run({"edit", input, "--method", method, "--out", edits.string(), "--trace", trace.string()});
        all += slurp(edits) + slurp(trace);
        if (rep == 0)
          first = all;
        else if (all != first)
          out.fail("edit --method " + method + " differs between runs on seed " + std::to_string(seed));
      }
      ++compared;
    }
  }
  const std::vector<std::string> bench{"bench", "--n", "6", "10", "--flips", "2", "--trials", "4",
                                       "--seed", "5", "--methods", "heuristic,exact,oracle"};
  const auto a = without_timing(run(bench));
  const auto b = without_timing(run(bench));
  ++compared;
  if (a != b)
    out.fail("bench output differs between runs");
  out.detail = std::to_string(compared) + " repeated command pairs";
  return out;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle optimality", oracle_optimality},
      {2, "soundness", soundness},
      {3, "merge trace replay", [] { return per_solution(props::trace_failure, "exact solutions replayed"); }},
      {4, "module preservation",
       [] { return per_solution(props::module_preservation_failure, "exact solutions checked against every module"); }},
      {5, "twin safety", [] { return per_solution(props::twin_safety_failure, "exact solutions checked"); }},
      {6, "modular decomposition", md_correctness},
      {7, "spider scheme", spider_scheme},
      {8, "named instances", named_instances},
      {9, "three-way merge algebra", three_way_merge},
      {10, "determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail;
    if (!o.pass)
      std::cout << " [" << o.first_failure << "]";
    std::cout << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
