#include "coedit/edit_set.hpp"

#include <algorithm>
#include <string>

#include "coedit/errors.hpp"
#include "coedit/modular_decomposition.hpp"

namespace coedit {

EditSet::EditSet(std::initializer_list<Edge> pairs) {
  for (const auto& e : pairs)
    insert(e);
}

bool EditSet::insert(Vertex u, Vertex v) {
  if (u == v)
    throw InputError("edit pair with identical endpoints " + std::to_string(u));
  return pairs_.emplace(std::min(u, v), std::max(u, v)).second;
}

bool EditSet::erase(Vertex u, Vertex v) { return pairs_.erase({std::min(u, v), std::max(u, v)}) > 0; }

bool EditSet::contains(Vertex u, Vertex v) const { return pairs_.count({std::min(u, v), std::max(u, v)}) > 0; }

void EditSet::insert_all(const EditSet& other) { pairs_.insert(other.begin(), other.end()); }

Graph apply(const Graph& g, const EditSet& f) {
  Graph out = g;
  for (auto [u, v] : f)
    out.flip(u, v);
  return out;
}

EditSet difference(const Graph& a, const Graph& b) {
  if (a.order() != b.order())
    throw InputError("graphs of different order");
  EditSet out;
  for (Vertex u = 0; u < a.order(); ++u) {
    const VertexSet diff = a.neighbors(u) ^ b.neighbors(u);
    for (auto v = diff.find_next(u); v != VertexSet::npos; v = diff.find_next(v))
      out.insert(u, v);
  }
  return out;
}

std::optional<VertexList> find_module_violation(const Graph& g, const Graph& edited) {
  if (g.order() != edited.order())
    throw InputError("graphs of different order");
  const MDTree t = build_mdt(g);
  for (const auto& node : t.nodes) {
    if (!is_module(edited, node.vertices))
      return node.vertices;
    if (node.kind != MdKind::Parallel && node.kind != MdKind::Series)
      continue;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      for (std::size_t j = i + 1; j < node.children.size(); ++j) {
        VertexList both = t.nodes[node.children[i]].vertices;
        const auto& other = t.nodes[node.children[j]].vertices;
        both.insert(both.end(), other.begin(), other.end());
        std::sort(both.begin(), both.end());
        if (!is_module(edited, both))
          return both;
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexList> find_module_violation_exhaustive(const Graph& g, const Graph& edited, std::size_t max_n) {
  if (g.order() != edited.order())
    throw InputError("graphs of different order");
  for (const auto& m : enumerate_all_modules(g, max_n))
    if (!is_module(edited, m))
      return m;
  return std::nullopt;
}

} // namespace coedit
