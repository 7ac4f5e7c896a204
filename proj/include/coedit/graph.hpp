#ifndef COEDIT_GRAPH_HPP
#define COEDIT_GRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace coedit {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of vertex ids.
using VertexList = std::vector<Vertex>;
/// Dense membership set over 0..n-1.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Builds a membership set; throws InputError on ids >= n.
VertexSet to_set(std::span<const Vertex> vertices, std::size_t n);
VertexList to_list(const VertexSet& set);

/// Induced path a-b-c-d, stored with a < d.
struct P4Witness {
  Vertex a = 0, b = 0, c = 0, d = 0;

  std::array<Vertex, 4> vertices() const { return {a, b, c, d}; }
  friend auto operator<=>(const P4Witness&, const P4Witness&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws InputError on self-loops or ids out of range; repeated edges collapse.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const;
  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).count(); }
  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void flip(Vertex u, Vertex v);

  /// Empty set sized for this graph.
  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet full_set() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the host id of vertex i in `graph`.
  VertexList original;
};

/// Subgraph on the given vertices, relabelled in increasing id order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Components sorted by smallest member.
std::vector<VertexList> connected_components(const Graph& g);

/// Components of g[within] (or of its complement), sorted by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);
std::vector<VertexSet> co_components_within(const Graph& g, const VertexSet& within);

/// Induced P4s in lexicographic order of (a, b, c, d); each path reported once.
std::vector<P4Witness> enumerate_p4s(const Graph& g, std::optional<std::size_t> limit = std::nullopt);
std::size_t count_p4s(const Graph& g);
std::size_t count_p4s_within(const Graph& g, const VertexSet& within);

struct CographCheck {
  bool cograph = true;
  /// Lexicographically first induced P4 when not a cograph.
  std::optional<P4Witness> witness;

  explicit operator bool() const noexcept { return cograph; }
};

CographCheck is_cograph(const Graph& g);
/// Cograph test on g[within] without building the subgraph; no witness.
bool is_cograph_within(const Graph& g, const VertexSet& within);

} // namespace coedit

#endif
