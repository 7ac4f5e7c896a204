#include "coedit/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "coedit/errors.hpp"

namespace coedit {

namespace {

// Splits a line into unsigned integers; false on anything else.
bool parse_numbers(const std::string& text, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
      ++i;
      continue;
    }
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || end == text.data() + i)
      return false;
    i = static_cast<std::size_t>(end - text.data());
    if (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r')
      return false;
    out.push_back(value);
  }
  return true;
}

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

template <class Read>
auto with_file(const std::string& path, Read read) {
  if (path == "-")
    return read(std::cin);
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return read(in);
}

} // namespace

Graph read_edge_list(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> nums;
  std::optional<Graph> g;
  std::size_t expected = 0, seen = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (skippable(line))
      continue;
    if (!parse_numbers(line, nums) || nums.size() != 2)
      throw ParseError(lineno, g ? "expected an edge 'u v'" : "expected a header 'n m'");
    if (!g) {
      if (nums[0] > 1'000'000)
        throw ParseError(lineno, "vertex count " + std::to_string(nums[0]) + " is too large");
      g.emplace(nums[0]);
      expected = nums[1];
      continue;
    }
    const auto u = nums[0], v = nums[1];
    if (u >= g->order() || v >= g->order())
      throw ParseError(lineno, "vertex id out of range");
    if (u == v)
      throw ParseError(lineno, "self-loop " + std::to_string(u));
    if (g->adjacent(u, v))
      throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    if (++seen > expected)
      throw ParseError(lineno, "more edges than the header's m=" + std::to_string(expected));
    g->add_edge(u, v);
  }
  if (!g)
    throw ParseError(lineno ? lineno : 1, "missing header 'n m'");
  if (seen != expected)
    throw ParseError(lineno, "header announces " + std::to_string(expected) + " edges, found " +
                                 std::to_string(seen));
  return *g;
}

Graph read_edge_list_file(const std::string& path) {
  return with_file(path, [](std::istream& is) { return read_edge_list(is); });
}

void write_edge_list(std::ostream& os, const Graph& g) {
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges)
    os << u << ' ' << v << '\n';
}

EditSet read_edit_set(std::istream& is, const Graph& g) {
  EditSet f;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> nums;
  while (std::getline(is, line)) {
    ++lineno;
    if (skippable(line))
      continue;
    auto pos = line.find_first_not_of(" \t");
    const char sign = line[pos];
    if ((sign != '+' && sign != '-') || !parse_numbers(line.substr(pos + 1), nums) || nums.size() != 2)
      throw ParseError(lineno, "expected '+ u v' or '- u v'");
    const auto u = nums[0], v = nums[1];
    if (u >= g.order() || v >= g.order())
      throw ParseError(lineno, "vertex id out of range for n=" + std::to_string(g.order()));
    if (u == v)
      throw ParseError(lineno, "pair with equal endpoints");
    if (g.adjacent(u, v) != (sign == '-'))
      throw ParseError(lineno, sign == '-' ? "deletion of a non-edge" : "addition of an existing edge");
    if (!f.insert(u, v))
      throw ParseError(lineno, "duplicate pair");
  }
  return f;
}

EditSet read_edit_set_file(const std::string& path, const Graph& g) {
  return with_file(path, [&](std::istream& is) { return read_edit_set(is, g); });
}

void write_edit_set(std::ostream& os, const Graph& g, const EditSet& f) {
  for (auto [u, v] : f)
    os << (g.adjacent(u, v) ? "- " : "+ ") << u << ' ' << v << '\n';
}

// ---- trees

namespace {

const char* name_of(CotreeKind k) {
  switch (k) {
  case CotreeKind::Leaf:
    return "leaf";
  case CotreeKind::Series:
    return "series";
  case CotreeKind::Parallel:
    return "parallel";
  }
  return "?";
}

const char* name_of(MdKind k) {
  switch (k) {
  case MdKind::Leaf:
    return "leaf";
  case MdKind::Series:
    return "series";
  case MdKind::Parallel:
    return "parallel";
  case MdKind::Prime:
    return "prime";
  }
  return "?";
}

Json cotree_node(const Cotree& t, std::size_t at, std::vector<Vertex>& leaves) {
  const auto& nd = t.nodes.at(at);
  Json j;
  j["type"] = name_of(nd.kind);
  if (nd.kind == CotreeKind::Leaf) {
    j["vertex"] = nd.vertex;
    leaves.push_back(nd.vertex);
    return j;
  }
  std::vector<Vertex> mine;
  Json kids = Json::array();
  for (auto c : nd.children)
    kids.push_back(cotree_node(t, c, mine));
  std::sort(mine.begin(), mine.end());
  j["vertices"] = mine;
  j["children"] = std::move(kids);
  leaves.insert(leaves.end(), mine.begin(), mine.end());
  return j;
}

Json md_node(const MDTree& t, std::size_t at) {
  const auto& nd = t.nodes.at(at);
  Json j;
  j["type"] = name_of(nd.kind);
  if (nd.kind == MdKind::Leaf) {
    j["vertex"] = nd.vertices.at(0);
    return j;
  }
  j["vertices"] = nd.vertices;
  Json kids = Json::array();
  for (auto c : nd.children)
    kids.push_back(md_node(t, c));
  j["children"] = std::move(kids);
  if (nd.kind == MdKind::Prime) {
    Json edges = Json::array();
    for (auto [a, b] : nd.quotient->edges())
      edges.push_back({a, b});
    j["quotient_edges"] = std::move(edges);
  }
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("tree node lacks '") + key + "'");
  return j.at(key);
}

std::string type_of(const Json& j) {
  const auto& t = field(j, "type");
  if (!t.is_string())
    throw InputError("tree node 'type' must be a string");
  return t.get<std::string>();
}

Vertex vertex_of(const Json& j) {
  const auto& v = field(j, "vertex");
  if (!v.is_number_unsigned())
    throw InputError("leaf 'vertex' must be a non-negative integer");
  return v.get<Vertex>();
}

const Json& children_of(const Json& j) {
  const auto& c = field(j, "children");
  if (!c.is_array())
    throw InputError("'children' must be an array");
  return c;
}

void read_cotree(const Json& j, Cotree& t, std::size_t depth) {
  if (depth > 100'000)
    throw InputError("tree too deep");
  const auto type = type_of(j);
  if (type == "leaf") {
    t.nodes.push_back({CotreeKind::Leaf, vertex_of(j), {}});
    return;
  }
  CotreeKind kind;
  if (type == "series")
    kind = CotreeKind::Series;
  else if (type == "parallel")
    kind = CotreeKind::Parallel;
  else
    throw InputError("unknown cotree node type '" + type + "'");
  const std::size_t self = t.nodes.size();
  t.nodes.push_back({kind, 0, {}});
  for (const auto& c : children_of(j)) {
    t.nodes[self].children.push_back(t.nodes.size());
    read_cotree(c, t, depth + 1);
  }
}

void read_md(const Json& j, MDTree& t, std::size_t depth) {
  if (depth > 100'000)
    throw InputError("tree too deep");
  const auto type = type_of(j);
  const std::size_t self = t.nodes.size();
  if (type == "leaf") {
    t.nodes.push_back({MdKind::Leaf, {vertex_of(j)}, {}, std::nullopt});
    return;
  }
  MdKind kind;
  if (type == "series")
    kind = MdKind::Series;
  else if (type == "parallel")
    kind = MdKind::Parallel;
  else if (type == "prime")
    kind = MdKind::Prime;
  else
    throw InputError("unknown tree node type '" + type + "'");
  t.nodes.push_back({kind, {}, {}, std::nullopt});
  VertexList all;
  for (const auto& c : children_of(j)) {
    t.nodes[self].children.push_back(t.nodes.size());
    read_md(c, t, depth + 1);
    const auto& got = t.nodes[t.nodes[self].children.back()].vertices;
    all.insert(all.end(), got.begin(), got.end());
  }
  std::sort(all.begin(), all.end());
  if (j.contains("vertices") && j.at("vertices") != Json(all))
    throw InputError("'vertices' does not match the leaves below the node");
  t.nodes[self].vertices = std::move(all);
  if (kind == MdKind::Prime) {
    const std::size_t k = t.nodes[self].children.size();
    Graph q(k);
    const auto& edges = field(j, "quotient_edges");
    if (!edges.is_array())
      throw InputError("'quotient_edges' must be an array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        throw InputError("quotient edge must be a pair of child indices");
      const auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
      if (a >= k || b >= k || a == b || q.adjacent(a, b))
        throw InputError("bad quotient edge");
      q.add_edge(a, b);
    }
    t.nodes[self].quotient = std::move(q);
  }
}

Json vertex_lists(const std::vector<VertexList>& sets) {
  Json out = Json::array();
  for (const auto& s : sets)
    out.push_back(s);
  return out;
}

Json pairs(const EditSet& f) {
  Json out = Json::array();
  for (auto [u, v] : f)
    out.push_back({u, v});
  return out;
}

} // namespace

Json to_json(const Cotree& t) {
  if (t.empty())
    return Json::object();
  std::vector<Vertex> leaves;
  return cotree_node(t, t.root(), leaves);
}

Json to_json(const MDTree& t) {
  if (t.empty())
    return Json::object();
  return md_node(t, t.root());
}

Cotree cotree_from_json(const Json& j) {
  Cotree t;
  if (j.is_object() && j.empty())
    return t;
  read_cotree(j, t, 0);
  cotree_to_graph(t); // validates the structure
  return t;
}

MDTree mdtree_from_json(const Json& j) {
  MDTree t;
  if (j.is_object() && j.empty())
    return t;
  read_md(j, t, 0);
  const auto& all = t.nodes[0].vertices;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != i)
      throw InputError("tree leaves must be exactly 0..n-1");
  for (const auto& nd : t.nodes)
    if (nd.kind != MdKind::Leaf && nd.children.size() < 2)
      throw InputError("inner tree node with fewer than two children");
  return t;
}

Json to_json(const MergeTrace& trace, const std::vector<SpiderStep>& spider_steps) {
  Json out;
  Json records = Json::array();
  for (const auto& r : trace.records) {
    Json j;
    j["prime_module"] = r.prime_module;
    j["sources"] = vertex_lists(r.sources);
    j["merged"] = r.merged;
    j["edits"] = pairs(r.edits);
    records.push_back(std::move(j));
  }
  out["records"] = std::move(records);
  Json spiders = Json::array();
  for (const auto& s : spider_steps) {
    Json j;
    j["prime_module"] = s.prime_module;
    j["kind"] = s.kind == SpiderKind::Thin ? "thin" : "thick";
    j["edits"] = pairs(s.edits);
    spiders.push_back(std::move(j));
  }
  out["spider_steps"] = std::move(spiders);
  return out;
}

} // namespace coedit
