#include "coedit/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "coedit/errors.hpp"

namespace coedit {

VertexSet to_set(std::span<const Vertex> vertices, std::size_t n) {
  VertexSet set(n);
  for (Vertex v : vertices) {
    if (v >= n)
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    set.set(v);
  }
  return set;
}

VertexList to_list(const VertexSet& set) {
  VertexList out;
  out.reserve(set.count());
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
    out.push_back(v);
  return out;
}

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_)
    twice += row.count();
  return twice / 2;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= order() || v >= order())
    throw InputError("vertex pair (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") out of range for n=" + std::to_string(order()));
  if (u == v)
    throw InputError("self-loop at vertex " + std::to_string(u));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order() || v >= order())
    throw InputError("vertex out of range");
  return adj_[u].test(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  if (v >= order())
    throw InputError("vertex " + std::to_string(v) + " out of range");
  return adj_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u].reset(v);
  adj_[v].reset(u);
}

void Graph::flip(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u].flip(v);
  adj_[v].flip(u);
}

VertexSet Graph::full_set() const {
  VertexSet s(order());
  s.set();
  return s;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v))
        out.add_edge(u, v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  InducedSubgraph sub{Graph(vertices.count()), to_list(vertices)};
  const auto& ids = sub.original;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j]))
        sub.graph.add_edge(i, j);
  return sub;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  return induced_subgraph(g, to_set(vertices, g.order()));
}

namespace {

// Flood fill inside `within`; `co` walks the complement instead.
std::vector<VertexSet> flood_components(const Graph& g, const VertexSet& within, bool co) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left.any()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.set(left.find_first());
    while (frontier.any()) {
      comp |= frontier;
      left -= frontier;
      VertexSet reach(g.order());
      for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
        reach |= co ? (left - g.neighbors(v)) : (left & g.neighbors(v));
      frontier = reach;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

} // namespace

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  return flood_components(g, within, false);
}

std::vector<VertexSet> co_components_within(const Graph& g, const VertexSet& within) {
  return flood_components(g, within, true);
}

std::vector<VertexList> connected_components(const Graph& g) {
  std::vector<VertexList> out;
  for (const auto& c : components_within(g, g.full_set()))
    out.push_back(to_list(c));
  return out;
}

std::vector<P4Witness> enumerate_p4s(const Graph& g, std::optional<std::size_t> limit) {
  std::vector<P4Witness> out;
  if (limit && *limit == 0)
    return out;
  const std::size_t n = g.order();
  // Visiting a < b-neighbours < c < d in increasing order yields lexicographic output.
  for (Vertex a = 0; a < n; ++a) {
    const auto& na = g.neighbors(a);
    for (auto b = na.find_first(); b != VertexSet::npos; b = na.find_next(b)) {
      VertexSet cs = g.neighbors(b) - na;
      cs.reset(a);
      for (auto c = cs.find_first(); c != VertexSet::npos; c = cs.find_next(c)) {
        VertexSet ds = g.neighbors(c) - na - g.neighbors(b);
        ds.reset(a);
        ds.reset(b);
        for (auto d = ds.find_next(a); d != VertexSet::npos; d = ds.find_next(d)) {
          out.push_back({a, b, c, d});
          if (limit && out.size() >= *limit)
            return out;
        }
      }
    }
  }
  return out;
}

namespace {

std::uint64_t first_word(const VertexSet& s) {
  std::uint64_t w = 0;
  boost::to_block_range(s, &w);
  return w;
}

std::size_t count_p4s_small(const Graph& g, const VertexSet& within) {
  const std::size_t n = g.order();
  std::array<std::uint64_t, 64> adj{};
  const std::uint64_t in = first_word(within);
  for (std::size_t v = 0; v < n; ++v)
    adj[v] = first_word(g.neighbors(v)) & in;
  std::size_t total = 0;
  for (std::uint64_t bs = in; bs; bs &= bs - 1) {
    const int b = std::countr_zero(bs);
    for (std::uint64_t cs = adj[b]; cs; cs &= cs - 1) {
      const int c = std::countr_zero(cs);
      const std::uint64_t as = adj[b] & ~adj[c] & ~(std::uint64_t{1} << c);
      const std::uint64_t ds = adj[c] & ~adj[b] & ~(std::uint64_t{1} << b);
      if (!ds)
        continue;
      for (std::uint64_t a = as; a; a &= a - 1)
        total += static_cast<std::size_t>(std::popcount(ds & ~adj[std::countr_zero(a)]));
    }
  }
  return total / 2;
}

} // namespace

std::size_t count_p4s_within(const Graph& g, const VertexSet& within) {
  if (g.order() <= 64)
    return count_p4s_small(g, within);
  std::size_t total = 0;
  // Each P4 is counted once per orientation of its middle edge b-c, i.e. twice.
  for (auto b = within.find_first(); b != VertexSet::npos; b = within.find_next(b)) {
    const VertexSet nb = g.neighbors(b) & within;
    for (auto c = nb.find_first(); c != VertexSet::npos; c = nb.find_next(c)) {
      VertexSet as = nb - g.neighbors(c);
      as.reset(c);
      VertexSet ds = (g.neighbors(c) & within) - g.neighbors(b);
      ds.reset(b);
      if (as.none() || ds.none())
        continue;
      for (auto a = as.find_first(); a != VertexSet::npos; a = as.find_next(a))
        total += (ds - g.neighbors(a)).count();
    }
  }
  return total / 2;
}

std::size_t count_p4s(const Graph& g) { return count_p4s_within(g, g.full_set()); }

bool is_cograph_within(const Graph& g, const VertexSet& within) {
  if (within.count() <= 1)
    return true;
  auto comps = components_within(g, within);
  if (comps.size() == 1) {
    comps = co_components_within(g, within);
    if (comps.size() == 1)
      return false;
  }
  return std::all_of(comps.begin(), comps.end(),
                     [&](const VertexSet& c) { return is_cograph_within(g, c); });
}

CographCheck is_cograph(const Graph& g) {
  if (is_cograph_within(g, g.full_set()))
    return {};
  auto found = enumerate_p4s(g, 1);
  if (found.empty())
    throw InternalError("decomposition reported a P4 that enumeration cannot find");
  return {false, found.front()};
}

} // namespace coedit
