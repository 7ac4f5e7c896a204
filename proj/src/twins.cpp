#include "coedit/twins.hpp"

#include <algorithm>
#include <map>

namespace coedit {

TwinPartition twin_partition(const Graph& g) {
  const std::size_t n = g.order();
  // A vertex can have false twins or true twins but never both, so grouping
  // by open and by closed neighbourhood gives disjoint classes.
  std::map<VertexSet, VertexList> by_open, by_closed;
  for (Vertex v = 0; v < n; ++v) {
    by_open[g.neighbors(v)].push_back(v);
    VertexSet closed = g.neighbors(v);
    closed.set(v);
    by_closed[closed].push_back(v);
  }
  TwinPartition out;
  out.class_of.assign(n, n);
  auto take = [&](const std::map<VertexSet, VertexList>& groups, TwinKind kind) {
    for (const auto& [key, members] : groups) {
      if (members.size() < 2)
        continue;
      out.classes.push_back({members, kind});
    }
  };
  take(by_open, TwinKind::False);
  take(by_closed, TwinKind::True);
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (auto v : out.classes[c].vertices)
      out.class_of[v] = c;
  for (Vertex v = 0; v < n; ++v)
    if (out.class_of[v] == n)
      out.classes.push_back({{v}, TwinKind::Singleton});

  std::sort(out.classes.begin(), out.classes.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.vertices.front() < b.vertices.front(); });
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (auto v : out.classes[c].vertices)
      out.class_of[v] = c;
  return out;
}

bool has_nontrivial_twins(const Graph& g) {
  for (const auto& c : twin_partition(g).classes)
    if (c.vertices.size() >= 2)
      return true;
  return false;
}

} // namespace coedit
