#include "coedit/cotree.hpp"

#include <algorithm>
#include <string>

#include "coedit/errors.hpp"

namespace coedit {

std::size_t Cotree::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const CotreeNode& n) {
    return n.kind == CotreeKind::Leaf;
  }));
}

namespace {

std::size_t build(const Graph& g, const VertexSet& set, Cotree& t) {
  const std::size_t id = t.nodes.size();
  t.nodes.emplace_back();
  if (set.count() == 1) {
    t.nodes[id].vertex = set.find_first();
    return id;
  }
  auto parts = components_within(g, set);
  CotreeKind kind = CotreeKind::Parallel;
  if (parts.size() == 1) {
    parts = co_components_within(g, set);
    kind = CotreeKind::Series;
    if (parts.size() == 1) {
      auto sub = induced_subgraph(g, set);
      auto p4 = enumerate_p4s(sub.graph, 1).at(0);
      const auto& o = sub.original;
      throw RecognitionError("graph is not a cograph", {o[p4.a], o[p4.b], o[p4.c], o[p4.d]});
    }
  }
  t.nodes[id].kind = kind;
  for (const auto& part : parts) {
    auto child = build(g, part, t);
    t.nodes[id].children.push_back(child);
  }
  return id;
}

void collect_leaves(const Cotree& t, std::size_t node, std::vector<std::size_t>& seen, std::size_t depth,
                    std::vector<VertexList>& leaves_of) {
  if (node >= t.nodes.size())
    throw InputError("cotree child index " + std::to_string(node) + " out of range");
  if (seen[node]++)
    throw InputError("cotree node " + std::to_string(node) + " reachable twice");
  if (depth > t.nodes.size())
    throw InputError("cotree contains a cycle");
  const auto& nd = t.nodes[node];
  if (nd.kind == CotreeKind::Leaf) {
    if (!nd.children.empty())
      throw InputError("cotree leaf with children");
    leaves_of[node] = {nd.vertex};
    return;
  }
  if (nd.children.size() < 2)
    throw InputError("cotree inner node " + std::to_string(node) + " has fewer than two children");
  for (auto c : nd.children) {
    collect_leaves(t, c, seen, depth + 1, leaves_of);
    auto& acc = leaves_of[node];
    acc.insert(acc.end(), leaves_of[c].begin(), leaves_of[c].end());
  }
}

} // namespace

Cotree build_cotree(const Graph& g) {
  Cotree t;
  if (g.order() == 0)
    return t;
  build(g, g.full_set(), t);
  return t;
}

Graph cotree_to_graph(const Cotree& t) {
  if (t.empty())
    return Graph(0);
  const std::size_t n = t.leaf_count();
  std::vector<std::size_t> seen(t.nodes.size(), 0);
  std::vector<VertexList> leaves_of(t.nodes.size());
  collect_leaves(t, t.root(), seen, 0, leaves_of);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InputError("cotree has nodes unreachable from the root");
  VertexSet present(n);
  for (const auto& nd : t.nodes) {
    if (nd.kind != CotreeKind::Leaf)
      continue;
    if (nd.vertex >= n || present.test(nd.vertex))
      throw InputError("cotree leaves must be exactly the vertices 0.." + std::to_string(n - 1));
    present.set(nd.vertex);
  }
  Graph g(n);
  for (const auto& nd : t.nodes) {
    if (nd.kind != CotreeKind::Series)
      continue;
    for (std::size_t i = 0; i < nd.children.size(); ++i)
      for (std::size_t j = i + 1; j < nd.children.size(); ++j)
        for (auto u : leaves_of[nd.children[i]])
          for (auto v : leaves_of[nd.children[j]])
            g.add_edge(u, v);
  }
  return g;
}

bool is_canonical(const Cotree& t) {
  for (const auto& nd : t.nodes) {
    if (nd.kind == CotreeKind::Leaf)
      continue;
    if (nd.children.size() < 2)
      return false;
    for (auto c : nd.children)
      if (t.nodes.at(c).kind == nd.kind)
        return false;
  }
  return true;
}

} // namespace coedit
