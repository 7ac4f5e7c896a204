#ifndef COEDIT_GENBENCH_HPP
#define COEDIT_GENBENCH_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coedit/edit_set.hpp"
#include "coedit/graph.hpp"

namespace coedit {

/// Seeded mt19937_64 with its own bounded draws, so a seed gives the same
/// stream on every standard library.
class Rng {
public:
  static constexpr const char* algorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return state_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return next() >> 63; }
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

  /// `count` distinct values from [0, range), sorted.
  std::vector<std::uint64_t> sample(std::uint64_t range, std::uint64_t count);

private:
  std::mt19937_64 state_;
};

struct GeneratorConfig {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::size_t max_children = 4;
  std::size_t flips = 0;
};

/// Random canonical cotree over a shuffled vertex order: every inner node
/// splits its leaves into a uniform composition of 2..max_children parts,
/// labels alternate below a root label drawn from the seed.
Graph random_cograph(const GeneratorConfig& cfg);

/// Flips q distinct pairs chosen uniformly. Throws InputError if q > n(n-1)/2.
std::pair<Graph, EditSet> perturb(const Graph& g, std::size_t q, std::uint64_t seed);

/// Every pair is an edge independently with probability p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// The benchmark instance for a config: random_cograph perturbed by cfg.flips.
Graph bench_instance(const GeneratorConfig& cfg);

enum class BenchMethod { Heuristic, Exact, Oracle };

std::string to_string(BenchMethod m);
BenchMethod parse_bench_method(const std::string& name);

struct BenchRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t flips = 0;
  BenchMethod method = BenchMethod::Heuristic;
  std::optional<std::size_t> edit_size; // empty when skipped for capacity
  bool cograph_after = false;
  std::optional<std::size_t> optimum;
  double wall_ms = 0;
};

struct BenchAggregate {
  std::size_t n = 0;
  std::size_t flips = 0;
  BenchMethod method = BenchMethod::Heuristic;
  std::size_t rows = 0; // rows that were not skipped
  double mean_edit_size = 0;
  std::optional<double> matches_optimum; // among rows with a known optimum
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchAggregate> aggregates;
};

/// Rows are sorted by seed, n, flips, method. The optimum column comes from
/// the oracle (n <= 8, at most 5 edits) or else from exact_edit when its cap
/// allows; capacity failures leave a row skipped.
BenchReport run_bench(const std::vector<GeneratorConfig>& configs, const std::vector<BenchMethod>& methods);

/// CSV with a `# generator:` line, the row table, a blank line and the
/// aggregate table.
void write_report(std::ostream& os, const BenchReport& report);

} // namespace coedit

#endif
