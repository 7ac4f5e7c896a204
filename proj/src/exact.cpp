#include "coedit/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "coedit/errors.hpp"
#include "coedit/modular_decomposition.hpp"
#include "mask_graph.hpp"

namespace coedit {

namespace {

using detail::MaskGraph;

struct PairRef {
  int u, v;
};

class OracleSearch {
public:
  OracleSearch(const Graph& g) : g_(MaskGraph::from(g)) {
    for (int u = 0; u < g_.n; ++u)
      for (int v = u + 1; v < g_.n; ++v)
        pairs_.push_back({u, v});
  }

  std::optional<std::vector<int>> run(std::size_t max_k) {
    for (std::size_t size = 0; size <= max_k; ++size) {
      chosen_.clear();
      if (combine(0, size))
        return chosen_;
    }
    return std::nullopt;
  }

private:
  bool combine(std::size_t start, std::size_t left) {
    if (left == 0)
      return detail::is_cograph(g_);
    for (std::size_t i = start; i + left <= pairs_.size(); ++i) {
      g_.flip(pairs_[i].u, pairs_[i].v);
      chosen_.push_back(static_cast<int>(i));
      bool hit = combine(i + 1, left - 1);
      g_.flip(pairs_[i].u, pairs_[i].v);
      if (hit)
        return true;
      chosen_.pop_back();
    }
    return false;
  }

  MaskGraph g_;
  std::vector<PairRef> pairs_;
  std::vector<int> chosen_;
};

struct P4 {
  int a, b, c, d;
};

class WeightedSearch {
public:
  WeightedSearch(const Graph& g, const std::vector<std::vector<std::uint64_t>>& weight)
      : g_(MaskGraph::from(g)), weight_(weight) {
    const int n = g_.n;
    if (weight_.size() != static_cast<std::size_t>(n))
      throw InputError("weight matrix does not match the graph order");
    for (int u = 0; u < n; ++u) {
      if (weight_[u].size() != static_cast<std::size_t>(n))
        throw InputError("weight matrix does not match the graph order");
      for (int v = 0; v < n; ++v)
        if (u != v && (weight_[u][v] == 0 || weight_[u][v] != weight_[v][u]))
          throw InputError("pair weights must be positive and symmetric");
    }
    // Deleting every edge or adding every non-edge both leave a cograph.
    std::uint64_t del = 0, add = 0;
    std::vector<PairRef> dels, adds;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g_.adjacent(u, v)) {
          del += weight_[u][v];
          dels.push_back({u, v});
        } else {
          add += weight_[u][v];
          adds.push_back({u, v});
        }
      }
    best_cost_ = std::min(del, add);
    best_ = del <= add ? dels : adds;
  }

  WeightedEdit run() {
    search(0);
    WeightedEdit out;
    out.cost = best_cost_;
    for (auto p : best_)
      out.pairs.insert(static_cast<Vertex>(p.u), static_cast<Vertex>(p.v));
    return out;
  }

private:
  bool forbidden(int u, int v) const { return (forbid_[u] >> v) & 1U; }
  void set_forbidden(int u, int v, bool on) {
    const std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
    if (on) {
      forbid_[u] |= bv;
      forbid_[v] |= bu;
    } else {
      forbid_[u] &= ~bv;
      forbid_[v] &= ~bu;
    }
  }

  std::vector<P4> find_p4s() const {
    std::vector<P4> out;
    const int n = g_.n;
    for (int a = 0; a < n; ++a) {
      std::uint64_t bs = g_.adj[a];
      while (bs) {
        int b = std::countr_zero(bs);
        bs &= bs - 1;
        std::uint64_t cs = g_.adj[b] & ~g_.adj[a] & ~(std::uint64_t{1} << a);
        while (cs) {
          int c = std::countr_zero(cs);
          cs &= cs - 1;
          std::uint64_t ds = g_.adj[c] & ~g_.adj[a] & ~g_.adj[b] & ~(std::uint64_t{1} << a) & ~(std::uint64_t{1} << b);
          ds &= ~((std::uint64_t{2} << a) - 1); // d > a
          while (ds) {
            int d = std::countr_zero(ds);
            ds &= ds - 1;
            out.push_back({a, b, c, d});
          }
        }
      }
    }
    return out;
  }

  static std::array<PairRef, 6> pairs_of(const P4& p) {
    return {{{p.a, p.b}, {p.b, p.c}, {p.c, p.d}, {p.a, p.c}, {p.b, p.d}, {p.a, p.d}}};
  }

  void search(std::uint64_t cost) {
    const auto p4s = find_p4s();
    if (p4s.empty()) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = chosen_;
      }
      return;
    }
    // Lower bound: P4s with pairwise disjoint free pairs each need their own flip.
    std::array<std::uint64_t, 64> used{};
    std::uint64_t bound = 0;
    std::size_t branch = 0;
    int fewest = 7;
    for (std::size_t i = 0; i < p4s.size(); ++i) {
      int free = 0;
      bool clash = false;
      std::uint64_t cheapest = std::numeric_limits<std::uint64_t>::max();
      for (auto [u, v] : pairs_of(p4s[i])) {
        if (forbidden(u, v))
          continue;
        ++free;
        clash = clash || ((used[u] >> v) & 1U);
        cheapest = std::min(cheapest, weight_[u][v]);
      }
      if (free == 0)
        return;
      if (free < fewest) {
        fewest = free;
        branch = i;
      }
      if (clash)
        continue;
      bound += cheapest;
      for (auto [u, v] : pairs_of(p4s[i]))
        if (!forbidden(u, v)) {
          used[u] |= std::uint64_t{1} << v;
          used[v] |= std::uint64_t{1} << u;
        }
    }
    if (cost + bound >= best_cost_)
      return;

    std::vector<PairRef> options;
    for (auto p : pairs_of(p4s[branch]))
      if (!forbidden(p.u, p.v))
        options.push_back(p);
    std::stable_sort(options.begin(), options.end(),
                     [&](PairRef x, PairRef y) { return weight_[x.u][x.v] < weight_[y.u][y.v]; });
    std::size_t tried = 0;
    for (auto p : options) {
      const std::uint64_t next = cost + weight_[p.u][p.v];
      if (next >= best_cost_)
        break;
      g_.flip(p.u, p.v);
      set_forbidden(p.u, p.v, true);
      chosen_.push_back({std::min(p.u, p.v), std::max(p.u, p.v)});
      search(next);
      chosen_.pop_back();
      g_.flip(p.u, p.v);
      // Stays forbidden for later siblings: solutions using it were covered above.
      ++tried;
    }
    for (std::size_t i = 0; i < tried; ++i)
      set_forbidden(options[i].u, options[i].v, false);
  }

  MaskGraph g_;
  const std::vector<std::vector<std::uint64_t>>& weight_;
  std::array<std::uint64_t, 64> forbid_{};
  std::vector<PairRef> chosen_;
  std::vector<PairRef> best_;
  std::uint64_t best_cost_ = 0;
};

} // namespace

std::optional<EditSet> oracle_exact_edit(const Graph& g, std::size_t max_k, const OracleLimits& limits) {
  if (g.order() > limits.max_n)
    throw CapacityError("oracle is limited to " + std::to_string(limits.max_n) + " vertices, got " +
                        std::to_string(g.order()));
  if (max_k > limits.max_k)
    throw CapacityError("oracle is limited to max_k=" + std::to_string(limits.max_k) + ", got " +
                        std::to_string(max_k));
  OracleSearch search(g);
  auto found = search.run(max_k);
  if (!found)
    return std::nullopt;
  std::vector<Edge> all;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      all.emplace_back(u, v);
  EditSet out;
  for (int i : *found)
    out.insert(all[static_cast<std::size_t>(i)]);
  return out;
}

WeightedEdit weighted_cograph_edit(const Graph& g, const std::vector<std::vector<std::uint64_t>>& weight) {
  WeightedSearch search(g, weight);
  return search.run();
}

EditSet exact_edit(const Graph& g, const ExactOptions& options) {
  const MDTree t = build_mdt(g);
  for (const auto& node : t.nodes) {
    if (node.kind == MdKind::Prime && node.children.size() > options.max_quotient)
      throw CapacityError("prime module with " + std::to_string(node.children.size()) +
                          " children exceeds the exact quotient cap of " + std::to_string(options.max_quotient) +
                          "; use the heuristic method");
  }
  EditSet out;
  for (const auto& node : t.nodes) {
    if (node.kind != MdKind::Prime)
      continue;
    const std::size_t k = node.children.size();
    std::vector<std::vector<std::uint64_t>> weight(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j)
          weight[i][j] = t.nodes[node.children[i]].vertices.size() * t.nodes[node.children[j]].vertices.size();
    const auto solved = weighted_cograph_edit(*node.quotient, weight);
    for (auto [i, j] : solved.pairs)
      for (auto x : t.nodes[node.children[i]].vertices)
        for (auto y : t.nodes[node.children[j]].vertices)
          out.insert(x, y);
  }
  return out;
}

} // namespace coedit
