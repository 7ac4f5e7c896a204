#include "coedit/genbench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <tuple>

#include "coedit/cotree.hpp"
#include "coedit/errors.hpp"
#include "coedit/exact.hpp"
#include "coedit/heuristic.hpp"

namespace coedit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0)
    throw ContractError("Rng::below needs a positive bound");
  // Reject the top sliver so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x;
  do
    x = next();
  while (x > limit);
  return x % bound;
}

std::vector<std::uint64_t> Rng::sample(std::uint64_t range, std::uint64_t count) {
  if (count > range)
    throw ContractError("cannot sample more values than the range holds");
  // Floyd's algorithm.
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = range - count; j < range; ++j) {
    const std::uint64_t t = below(j + 1);
    if (!chosen.insert(t).second)
      chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

namespace {

void grow(Cotree& tree, Rng& rng, const std::vector<Vertex>& order, std::size_t lo, std::size_t hi,
          CotreeKind kind, std::size_t max_children) {
  const std::size_t count = hi - lo;
  const std::size_t self = tree.nodes.size();
  if (count == 1) {
    tree.nodes.push_back({CotreeKind::Leaf, order[lo], {}});
    return;
  }
  tree.nodes.push_back({kind, 0, {}});
  const std::size_t parts = 2 + rng.below(std::min(max_children, count) - 1);
  auto cuts = rng.sample(count - 1, parts - 1);
  std::size_t start = lo;
  const CotreeKind next = kind == CotreeKind::Series ? CotreeKind::Parallel : CotreeKind::Series;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::size_t end = i + 1 < parts ? lo + cuts[i] + 1 : hi;
    tree.nodes[self].children.push_back(tree.nodes.size());
    grow(tree, rng, order, start, end, next, max_children);
    start = end;
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

} // namespace

Graph random_cograph(const GeneratorConfig& cfg) {
  if (cfg.n == 0)
    throw InputError("random_cograph needs n >= 1");
  if (cfg.max_children < 2)
    throw InputError("max_children must be at least 2");
  Rng rng(cfg.seed);
  const CotreeKind root = rng.coin() ? CotreeKind::Series : CotreeKind::Parallel;
  std::vector<Vertex> order(cfg.n);
  for (Vertex v = 0; v < cfg.n; ++v)
    order[v] = v;
  rng.shuffle(order);
  Cotree tree;
  grow(tree, rng, order, 0, cfg.n, root, cfg.max_children);
  return cotree_to_graph(tree);
}

std::pair<Graph, EditSet> perturb(const Graph& g, std::size_t q, std::uint64_t seed) {
  const std::uint64_t n = g.order();
  const std::uint64_t total = n * (n - (n ? 1 : 0)) / 2;
  if (q > total)
    throw InputError("cannot flip " + std::to_string(q) + " distinct pairs in a graph with " +
                     std::to_string(total) + " pairs");
  Rng rng(seed);
  EditSet flips;
  for (auto index : rng.sample(total, q)) {
    // Pair (u, v) with u < v in lexicographic rank `index`.
    Vertex u = 0;
    std::uint64_t row = n - 1;
    while (index >= row) {
      index -= row;
      ++u;
      --row;
    }
    flips.insert(u, u + 1 + index);
  }
  return {apply(g, flips), flips};
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < p)
        g.add_edge(u, v);
  return g;
}

Graph bench_instance(const GeneratorConfig& cfg) {
  return perturb(random_cograph(cfg), cfg.flips, cfg.seed ^ 0x9E3779B97F4A7C15ULL).first;
}

std::string to_string(BenchMethod m) {
  switch (m) {
  case BenchMethod::Heuristic:
    return "heuristic";
  case BenchMethod::Exact:
    return "exact";
  case BenchMethod::Oracle:
    return "oracle";
  }
  return "?";
}

BenchMethod parse_bench_method(const std::string& name) {
  for (auto m : {BenchMethod::Heuristic, BenchMethod::Exact, BenchMethod::Oracle})
    if (to_string(m) == name)
      return m;
  throw InputError("unknown method '" + name + "' (expected heuristic, exact or oracle)");
}

BenchReport run_bench(const std::vector<GeneratorConfig>& configs, const std::vector<BenchMethod>& methods) {
  const std::set<BenchMethod> wanted(methods.begin(), methods.end());
  BenchReport report;
  const OracleLimits limits;
  for (const auto& cfg : configs) {
    const Graph g = bench_instance(cfg);

    std::optional<std::size_t> optimum;
    if (g.order() <= limits.max_n) {
      if (auto found = oracle_exact_edit(g, limits.max_k, limits))
        optimum = found->size();
    }
    if (!optimum) {
      try {
        optimum = exact_edit(g).size();
      } catch (const CapacityError&) {
      }
    }

    for (auto method : wanted) {
      BenchRow row{cfg.seed, cfg.n, cfg.flips, method, std::nullopt, false, optimum, 0};
      const auto start = std::chrono::steady_clock::now();
      std::optional<EditSet> edits;
      try {
        switch (method) {
        case BenchMethod::Heuristic:
          edits = heuristic_edit(g).edits;
          break;
        case BenchMethod::Exact:
          edits = exact_edit(g);
          break;
        case BenchMethod::Oracle:
          edits = oracle_exact_edit(g, limits.max_k, limits);
          break;
        }
      } catch (const CapacityError&) {
      }
      row.wall_ms = elapsed_ms(start);
      if (edits) {
        row.edit_size = edits->size();
        row.cograph_after = static_cast<bool>(is_cograph(apply(g, *edits)));
      }
      report.rows.push_back(row);
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.seed, a.n, a.flips, a.method) < std::tie(b.seed, b.n, b.flips, b.method);
  });

  std::map<std::tuple<std::size_t, std::size_t, BenchMethod>, std::vector<const BenchRow*>> groups;
  for (const auto& row : report.rows)
    groups[{row.n, row.flips, row.method}].push_back(&row);
  for (const auto& [key, rows] : groups) {
    BenchAggregate agg{std::get<0>(key), std::get<1>(key), std::get<2>(key), 0, 0, std::nullopt};
    std::size_t total = 0, known = 0, hits = 0;
    for (const auto* row : rows) {
      if (!row->edit_size)
        continue;
      ++agg.rows;
      total += *row->edit_size;
      if (row->optimum) {
        ++known;
        hits += *row->edit_size == *row->optimum;
      }
    }
    if (agg.rows)
      agg.mean_edit_size = static_cast<double>(total) / static_cast<double>(agg.rows);
    if (known)
      agg.matches_optimum = static_cast<double>(hits) / static_cast<double>(known);
    report.aggregates.push_back(agg);
  }
  return report;
}

void write_report(std::ostream& os, const BenchReport& report) {
  os << "# generator: " << Rng::algorithm << "\n";
  os << "seed,n,flips,method,edit_size,cograph,optimum,wall_ms\n";
  os << std::fixed;
  for (const auto& r : report.rows) {
    os << r.seed << ',' << r.n << ',' << r.flips << ',' << to_string(r.method) << ',';
    if (r.edit_size)
      os << *r.edit_size << ',' << (r.cograph_after ? "true" : "false");
    else
      os << ",skipped";
    os << ',';
    if (r.optimum)
      os << *r.optimum;
    os << ',' << std::setprecision(3) << r.wall_ms << '\n';
  }
  os << "\nn,flips,method,rows,mean_edit_size,matches_optimum\n";
  for (const auto& a : report.aggregates) {
    os << a.n << ',' << a.flips << ',' << to_string(a.method) << ',' << a.rows << ',' << std::setprecision(4)
       << a.mean_edit_size << ',';
    if (a.matches_optimum)
      os << *a.matches_optimum;
    os << '\n';
  }
}

} // namespace coedit
