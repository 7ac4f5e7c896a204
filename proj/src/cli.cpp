#include "coedit/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "coedit/cotree.hpp"
#include "coedit/errors.hpp"
#include "coedit/exact.hpp"
#include "coedit/genbench.hpp"
#include "coedit/heuristic.hpp"
#include "coedit/io.hpp"
#include "coedit/merge.hpp"
#include "coedit/modular_decomposition.hpp"
#include "coedit/spider.hpp"

namespace coedit {

namespace {

std::string join(const VertexList& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

// Writes to `path`, or to `fallback` when path is empty or "-".
template <class Write>
void emit(const std::string& path, std::ostream& fallback, Write write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream os(path);
  if (!os)
    throw InputError("cannot write '" + path + "'");
  write(os);
  if (!os)
    throw InputError("error while writing '" + path + "'");
}

void recognize(const std::string& path, std::ostream& out) {
  const Graph g = read_edge_list_file(path);
  const auto check = is_cograph(g);
  if (check) {
    out << "cograph\n" << to_json(build_cotree(g)).dump(2) << '\n';
    return;
  }
  const auto& w = *check.witness;
  out << "not-cograph\nP4: " << w.a << ' ' << w.b << ' ' << w.c << ' ' << w.d << '\n';
}

void decompose(const std::string& path, std::ostream& out) {
  out << to_json(build_mdt(read_edge_list_file(path))).dump(2) << '\n';
}

struct EditArgs {
  std::string path;
  std::string method = "heuristic";
  std::string out;
  std::string trace;
  std::size_t max_k = OracleLimits{}.max_k;
};

void edit(const EditArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_edge_list_file(a.path);
  EditSet f;
  MergeTrace trace;
  std::vector<SpiderStep> spiders;
  bool have_trace = true;
  if (a.method == "heuristic") {
    auto r = heuristic_edit(g);
    f = std::move(r.edits);
    trace = std::move(r.trace);
    spiders = std::move(r.spider_steps);
  } else if (a.method == "exact") {
    f = exact_edit(g);
    if (!a.trace.empty())
      trace = decompose_into_merge_trace(g, f);
  } else {
    auto found = oracle_exact_edit(g, a.max_k);
    if (!found)
      throw CapacityError("oracle found no edit set with at most max_k=" + std::to_string(a.max_k) + " edits");
    f = std::move(*found);
    if (!a.trace.empty()) {
      try {
        trace = decompose_into_merge_trace(g, f);
      } catch (const ContractError& e) {
        have_trace = false;
        err << "trace not written: " << e.what() << '\n';
      }
    }
  }
  emit(a.out, out, [&](std::ostream& os) { write_edit_set(os, g, f); });
  if (!a.trace.empty() && have_trace)
    emit(a.trace, out, [&](std::ostream& os) { os << to_json(trace, spiders).dump(2) << '\n'; });
  out << "edits: " << f.size() << '\n';
}

void verify(const std::string& graph_path, const std::string& edits_path, std::ostream& out) {
  const Graph g = read_edge_list_file(graph_path);
  const EditSet f = read_edit_set_file(edits_path, g);
  const Graph h = apply(g, f);
  const bool cograph = static_cast<bool>(is_cograph(h));
  const auto violation = g.order() <= 12 ? find_module_violation_exhaustive(g, h) : find_module_violation(g, h);
  out << "cograph: " << (cograph ? "true" : "false") << '\n';
  out << "edits: " << f.size() << '\n';
  out << "module_preserving: " << (violation ? "false" : "true") << '\n';
  if (violation)
    out << "violated_module: " << join(*violation) << '\n';
  if (!cograph || violation)
    return;
  try {
    const auto trace = decompose_into_merge_trace(g, f);
    out << "trace_records: " << trace.records.size() << '\n';
    out << "trace_union_equals_edits: " << (trace.edit_union() == f ? "true" : "false") << '\n';
  } catch (const ContractError& e) {
    out << "trace_records: 0\n";
    out << "trace_union_equals_edits: false\n";
    out << "trace_error: " << e.what() << '\n';
  }
}

void spider(const std::string& path, std::ostream& out) {
  const auto d = recognize_spider(read_edge_list_file(path));
  if (!d) {
    out << "not-spider\n";
    return;
  }
  out << (d->kind == SpiderKind::Thin ? "thin" : "thick") << '\n';
  out << "K: " << join(d->body) << '\n';
  out << "S: " << join(d->legs_set) << '\n';
  out << "R: " << join(d->head) << '\n';
  out << "legs:";
  for (auto [k, s] : d->legs)
    out << ' ' << k << '-' << s;
  out << '\n';
}

struct BenchArgs {
  std::vector<std::size_t> n{8};
  std::vector<std::size_t> flips{2};
  std::size_t trials = 10;
  std::string methods = "heuristic,exact,oracle";
  std::uint64_t seed = 1;
  std::size_t max_children = 4;
  std::string report;
};

void bench(const BenchArgs& a, std::ostream& out) {
  std::vector<BenchMethod> methods;
  std::stringstream ss(a.methods);
  for (std::string name; std::getline(ss, name, ',');)
    if (!name.empty())
      methods.push_back(parse_bench_method(name));
  if (methods.empty())
    throw InputError("--methods names no method");
  std::vector<GeneratorConfig> configs;
  for (std::size_t t = 0; t < a.trials; ++t)
    for (auto n : a.n)
      for (auto q : a.flips) {
        if (n == 0)
          throw InputError("--n must be at least 1");
        if (q > n * (n - 1) / 2)
          throw InputError("--flips " + std::to_string(q) + " exceeds the pair count for n=" + std::to_string(n));
        configs.push_back({n, a.seed + t, a.max_children, q});
      }
  const auto report = run_bench(configs, methods);
  emit(a.report, out, [&](std::ostream& os) { write_report(os, report); });
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cograph recognition, modular decomposition and cograph editing"};
  app.name("coedit");
  app.require_subcommand(1);

  std::string path, edits_path;
  auto* rec = app.add_subcommand("recognize", "Cograph test with cotree or P4 witness");
  rec->add_option("graph", path, "Edge-list file, '-' for stdin")->required();
  auto* dec = app.add_subcommand("decompose", "Modular decomposition tree as JSON");
  dec->add_option("graph", path, "Edge-list file, '-' for stdin")->required();

  EditArgs ea;
  auto* ed = app.add_subcommand("edit", "Edit the graph into a cograph");
  ed->add_option("graph", ea.path, "Edge-list file, '-' for stdin")->required();
  ed->add_option("--method", ea.method, "heuristic, exact or oracle")
      ->check(CLI::IsMember({"heuristic", "exact", "oracle"}))
      ->capture_default_str();
  ed->add_option("--out", ea.out, "Edit-set output file (default stdout)");
  ed->add_option("--trace", ea.trace, "Merge trace JSON output file");
  ed->add_option("--max-k", ea.max_k, "Largest edit set the oracle tries")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Check an edit set against a graph");
  ver->add_option("graph", path, "Edge-list file")->required();
  ver->add_option("edits", edits_path, "Edit-set file")->required();

  auto* sp = app.add_subcommand("spider", "Spider recognition");
  sp->add_option("graph", path, "Edge-list file, '-' for stdin")->required();

  GeneratorConfig gc;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Random perturbed cograph as an edge list");
  gen->add_option("--n", gc.n, "Vertex count")->required();
  gen->add_option("--seed", gc.seed, "Generator seed")->capture_default_str();
  gen->add_option("--max-children", gc.max_children, "Cotree branching cap")->capture_default_str();
  gen->add_option("--flips", gc.flips, "Random pair flips after generation")->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  BenchArgs ba;
  auto* be = app.add_subcommand("bench", "Benchmark the editors on perturbed random cographs");
  be->add_option("--n", ba.n, "Vertex counts")->capture_default_str();
  be->add_option("--trials", ba.trials, "Seeds per (n, flips)")->capture_default_str();
  be->add_option("--flips", ba.flips, "Perturbation counts")->capture_default_str();
  be->add_option("--methods", ba.methods, "Comma-separated subset of heuristic,exact,oracle")->capture_default_str();
  be->add_option("--seed", ba.seed, "First seed")->capture_default_str();
  be->add_option("--max-children", ba.max_children, "Cotree branching cap")->capture_default_str();
  be->add_option("--report", ba.report, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (rec->parsed())
      recognize(path, out);
    else if (dec->parsed())
      decompose(path, out);
    else if (ed->parsed())
      edit(ea, out, err);
    else if (ver->parsed())
      verify(path, edits_path, out);
    else if (sp->parsed())
      spider(path, out);
    else if (gen->parsed()) {
      const Graph g = bench_instance(gc);
      emit(gen_out, out, [&](std::ostream& os) { write_edge_list(os, g); });
    } else if (be->parsed())
      bench(ba, out);
    out.flush();
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

} // namespace coedit
