#include "coedit/heuristic.hpp"

#include <algorithm>
#include <string>

#include "coedit/errors.hpp"
#include "coedit/modular_decomposition.hpp"

namespace coedit {

HeuristicResult heuristic_edit(const Graph& g) {
  HeuristicResult out;
  out.graph = g;
  const std::size_t n = g.order();
  const std::size_t cap = std::max<std::size_t>(n * n, 4);
  for (std::size_t round = 0;; ++round) {
    const MDTree t = build_mdt(out.graph);
    const auto at = lowest_prime_node(t);
    if (!at)
      break;
    if (round == cap)
      throw InternalError("heuristic did not finish within " + std::to_string(cap) + " rounds");
    const MdNode& node = t.nodes[*at];

    const auto sub = induced_subgraph(out.graph, node.vertices);
    if (auto spider = recognize_spider(sub.graph)) {
      SpiderStep step{node.vertices, spider->kind, {}};
      for (auto [u, v] : edit_spider(sub.graph, *spider))
        step.edits.insert(sub.original[u], sub.original[v]);
      out.graph = apply(out.graph, step.edits);
      out.spider_steps.push_back(std::move(step));
      continue;
    }

    std::vector<VertexList> children;
    for (auto c : node.children)
      children.push_back(t.nodes[c].vertices);
    const PairChoice choice = select_merge_pair(out.graph, children);
    MergeRecord rec;
    rec.prime_module = node.vertices;
    rec.sources = {children[choice.first], children[choice.second]};
    rec.merged = children[choice.first];
    rec.merged.insert(rec.merged.end(), children[choice.second].begin(), children[choice.second].end());
    std::sort(rec.merged.begin(), rec.merged.end());
    rec.edits = choice.plan.edits();
    out.graph = apply(out.graph, rec.edits);
    out.trace.records.push_back(std::move(rec));
  }
  if (!is_cograph(out.graph))
    throw InternalError("heuristic finished on a graph that is not a cograph");
  out.edits = difference(g, out.graph);
  return out;
}

} // namespace coedit
