#include "coedit/modular_decomposition.hpp"

#include <algorithm>
#include <string>

#include "coedit/errors.hpp"

namespace coedit {

bool is_module(const Graph& g, const VertexSet& m) {
  if (m.size() != g.order())
    throw InputError("vertex set sized for a different graph");
  auto first = m.find_first();
  if (first == VertexSet::npos)
    return true;
  const VertexSet outside = g.neighbors(first) - m;
  for (auto v = m.find_next(first); v != VertexSet::npos; v = m.find_next(v))
    if ((g.neighbors(v) - m) != outside)
      return false;
  return true;
}

bool is_module(const Graph& g, std::span<const Vertex> m) { return is_module(g, to_set(m, g.order())); }

namespace {

bool size_then_lex(const VertexList& a, const VertexList& b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

// Smallest module of g[within] containing both seeds.
VertexSet closure(const Graph& g, const VertexSet& within, Vertex x, Vertex y) {
  VertexSet c(g.order());
  c.set(x);
  c.set(y);
  bool grew = true;
  while (grew && c != within) {
    grew = false;
    const VertexSet rest = within - c;
    for (auto z = rest.find_first(); z != VertexSet::npos; z = rest.find_next(z)) {
      const VertexSet seen = g.neighbors(z) & c;
      if (seen.any() && seen != c) {
        c.set(z);
        grew = true;
      }
    }
  }
  return c;
}

// Coarsest partition of within \ {pivot} into modules of g[within].
std::vector<VertexSet> modules_avoiding(const Graph& g, const VertexSet& within, Vertex pivot) {
  std::vector<VertexSet> parts;
  VertexSet solo(g.order());
  solo.set(pivot);
  parts.push_back(solo);
  parts.push_back(within - solo);
  bool split = true;
  while (split) {
    split = false;
    for (auto z = within.find_first(); z != VertexSet::npos; z = within.find_next(z)) {
      const auto& nz = g.neighbors(z);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].test(z))
          continue;
        VertexSet in = parts[i] & nz;
        if (in.none() || in == parts[i])
          continue;
        parts.push_back(parts[i] - in);
        parts[i] = std::move(in);
        split = true;
      }
    }
  }
  return parts;
}

void sort_by_min(std::vector<VertexSet>& blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.find_first() < b.find_first(); });
}

std::size_t build(const Graph& g, const VertexSet& set, MDTree& t) {
  const std::size_t id = t.nodes.size();
  t.nodes.emplace_back();
  t.nodes[id].vertices = to_list(set);
  if (set.count() == 1)
    return id;
  auto split = split_node(g, set);
  t.nodes[id].kind = split.kind;
  if (split.kind == MdKind::Prime) {
    const std::size_t k = split.blocks.size();
    Graph q(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (g.adjacent(split.blocks[i].find_first(), split.blocks[j].find_first()))
          q.add_edge(i, j);
    t.nodes[id].quotient = std::move(q);
  }
  for (const auto& block : split.blocks) {
    auto child = build(g, block, t);
    t.nodes[id].children.push_back(child);
  }
  return id;
}

} // namespace

std::vector<VertexList> enumerate_all_modules(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.order();
  if (n > max_n)
    throw CapacityError("module enumeration is limited to " + std::to_string(max_n) + " vertices, got " +
                        std::to_string(n));
  std::vector<VertexList> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet m(n, mask);
    if (is_module(g, m))
      out.push_back(to_list(m));
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

NodeSplit split_node(const Graph& g, const VertexSet& within) {
  if (within.count() < 2)
    throw InputError("split_node needs at least two vertices");
  NodeSplit out{MdKind::Parallel, components_within(g, within)};
  if (out.blocks.size() > 1)
    return out;
  out = {MdKind::Series, co_components_within(g, within)};
  if (out.blocks.size() > 1)
    return out;

  // Connected and co-connected: the maximal proper modules partition the set.
  out.kind = MdKind::Prime;
  out.blocks.clear();
  const Vertex x = within.find_first();
  VertexSet home(g.order());
  home.set(x);
  for (auto y = within.find_next(x); y != VertexSet::npos; y = within.find_next(y)) {
    if (home.test(y))
      continue;
    VertexSet c = closure(g, within, x, y);
    if (c != within)
      home |= c;
  }
  out.blocks.push_back(home);
  for (auto& part : modules_avoiding(g, within, x))
    if (!part.intersects(home))
      out.blocks.push_back(std::move(part));
  sort_by_min(out.blocks);
  return out;
}

ModularPartition maximal_modular_partition(const Graph& g) {
  ModularPartition p;
  if (g.order() <= 1) {
    for (Vertex v = 0; v < g.order(); ++v)
      p.blocks.push_back({v});
    return p;
  }
  for (const auto& b : split_node(g, g.full_set()).blocks)
    p.blocks.push_back(to_list(b));
  return p;
}

Quotient quotient(const Graph& g, const ModularPartition& p) {
  const std::size_t n = g.order();
  VertexSet covered(n);
  std::vector<VertexList> blocks;
  for (const auto& b : p.blocks) {
    if (b.empty())
      throw InputError("empty block in modular partition");
    VertexSet s = to_set(b, n);
    if (s.count() != b.size() || s.intersects(covered))
      throw InputError("modular partition blocks overlap");
    covered |= s;
    blocks.push_back(to_list(s));
  }
  if (covered.count() != n)
    throw InputError("modular partition does not cover every vertex");
  for (const auto& b : blocks)
    if (!is_module(g, b))
      throw ContractError("partition block starting at vertex " + std::to_string(b[0]) + " is not a module");
  std::sort(blocks.begin(), blocks.end(), [](const VertexList& a, const VertexList& b) { return a[0] < b[0]; });
  Quotient q{Graph(blocks.size()), std::move(blocks)};
  for (std::size_t i = 0; i < q.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < q.blocks.size(); ++j)
      if (g.adjacent(q.blocks[i][0], q.blocks[j][0]))
        q.graph.add_edge(i, j);
  return q;
}

MDTree build_mdt(const Graph& g) {
  MDTree t;
  if (g.order() > 0)
    build(g, g.full_set(), t);
  return t;
}

std::vector<VertexList> strong_modules(const Graph& g) {
  std::vector<VertexList> out;
  for (auto& node : build_mdt(g).nodes)
    out.push_back(std::move(node.vertices));
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::optional<std::size_t> lowest_prime_node(const MDTree& t) {
  std::vector<char> prime_below(t.nodes.size(), 0);
  std::optional<std::size_t> best;
  // Preorder storage: every child has a larger index than its parent.
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    const auto& nd = t.nodes[i];
    bool below = false;
    for (auto c : nd.children)
      below = below || prime_below[c];
    if (nd.kind == MdKind::Prime && !below) {
      if (!best || nd.vertices.front() < t.nodes[*best].vertices.front())
        best = i;
    }
    prime_below[i] = below || nd.kind == MdKind::Prime;
  }
  return best;
}

std::optional<VertexList> lowest_prime_module(const MDTree& t) {
  if (auto i = lowest_prime_node(t))
    return t.nodes[*i].vertices;
  return std::nullopt;
}

} // namespace coedit
