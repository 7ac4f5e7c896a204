#include "coedit/spider.hpp"

#include <algorithm>
#include <string>

#include "coedit/errors.hpp"
#include "coedit/modular_decomposition.hpp"

namespace coedit {

namespace {

// In a thin spider the legs are exactly the degree-1 vertices: body and head
// vertices see at least two body vertices.
std::optional<SpiderDecomposition> recognize_thin(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4)
    return std::nullopt;
  SpiderDecomposition d;
  VertexSet body(n), legs(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 1)
      continue;
    Vertex k = g.neighbors(v).find_first();
    if (body.test(k))
      return std::nullopt;
    body.set(k);
    legs.set(v);
    d.legs.emplace_back(k, v);
  }
  if (d.legs.size() < 2 || body.intersects(legs))
    return std::nullopt;
  const VertexSet head = ~(body | legs);
  for (auto k = body.find_first(); k != VertexSet::npos; k = body.find_next(k)) {
    VertexSet expect = body | head;
    expect.reset(k);
    if ((g.neighbors(k) & expect) != expect)
      return std::nullopt;
  }
  std::sort(d.legs.begin(), d.legs.end());
  d.kind = SpiderKind::Thin;
  d.body = to_list(body);
  d.legs_set = to_list(legs);
  d.head = to_list(head);
  return d;
}

// The complement of a thick spider is a thin spider whose body is the
// original leg set.
SpiderDecomposition as_thick(SpiderDecomposition d) {
  d.kind = SpiderKind::Thick;
  std::swap(d.body, d.legs_set);
  for (auto& [k, s] : d.legs)
    std::swap(k, s);
  std::sort(d.legs.begin(), d.legs.end());
  return d;
}

bool describes(const Graph& g, const SpiderDecomposition& d) {
  auto found = d.kind == SpiderKind::Thin ? recognize_thin(g) : recognize_thin(complement(g));
  if (found && d.kind == SpiderKind::Thick)
    found = as_thick(*found);
  return found && found->body == d.body && found->legs == d.legs && found->head == d.head;
}

} // namespace

std::optional<SpiderDecomposition> recognize_spider(const Graph& g) {
  if (auto d = recognize_thin(g))
    return d;
  if (auto d = recognize_thin(complement(g)))
    return as_thick(*d);
  return std::nullopt;
}

bool is_p4_sparse(const Graph& g) {
  const MDTree t = build_mdt(g);
  for (const auto& node : t.nodes) {
    if (node.kind != MdKind::Prime)
      continue;
    if (!recognize_spider(induced_subgraph(g, node.vertices).graph))
      return false;
  }
  return true;
}

EditSet edit_spider(const Graph& g, const SpiderDecomposition& d) {
  if (!describes(g, d))
    throw ContractError("spider decomposition does not match the graph");
  auto head = induced_subgraph(g, d.head);
  if (auto check = is_cograph(head.graph); !check) {
    const auto& o = head.original;
    const auto& w = *check.witness;
    throw ContractError("spider head is not a cograph: P4 " + std::to_string(o[w.a]) + " " + std::to_string(o[w.b]) +
                        " " + std::to_string(o[w.c]) + " " + std::to_string(o[w.d]));
  }
  auto keep = std::min_element(d.legs.begin(), d.legs.end(), [](const auto& x, const auto& y) {
    return std::min(x.first, x.second) < std::min(y.first, y.second);
  });
  EditSet out;
  for (auto it = d.legs.begin(); it != d.legs.end(); ++it)
    if (it != keep)
      out.insert(it->first, it->second);
  return out;
}

} // namespace coedit
