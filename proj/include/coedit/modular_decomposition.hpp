#ifndef COEDIT_MODULAR_DECOMPOSITION_HPP
#define COEDIT_MODULAR_DECOMPOSITION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coedit/graph.hpp"

namespace coedit {

enum class MdKind { Leaf, Parallel, Series, Prime };

struct MdNode {
  MdKind kind = MdKind::Leaf;
  VertexList vertices;
  std::vector<std::size_t> children;
  /// Quotient of the node by its children (child i is quotient vertex i); prime nodes only.
  std::optional<Graph> quotient;

  friend bool operator==(const MdNode&, const MdNode&) = default;
};

/// Modular decomposition tree. Nodes are stored in preorder with the root at
/// index 0; children are ordered by their smallest vertex.
struct MDTree {
  std::vector<MdNode> nodes;

  bool empty() const noexcept { return nodes.empty(); }
  std::size_t root() const noexcept { return 0; }

  friend bool operator==(const MDTree&, const MDTree&) = default;
};

struct ModularPartition {
  /// Disjoint blocks covering the host vertex set, sorted by smallest member.
  std::vector<VertexList> blocks;

  friend bool operator==(const ModularPartition&, const ModularPartition&) = default;
};

/// Every member of `m` sees the same vertices outside `m`. Empty sets and
/// singletons are modules. Throws InputError on ids out of range.
bool is_module(const Graph& g, std::span<const Vertex> m);
bool is_module(const Graph& g, const VertexSet& m);

/// Exhaustive list of all non-empty modules, ordered by (size, members).
/// Throws CapacityError when g has more than `max_n` vertices.
std::vector<VertexList> enumerate_all_modules(const Graph& g, std::size_t max_n = 12);

/// Label and maximal strong submodules of g[within] (|within| >= 2).
struct NodeSplit {
  MdKind kind;
  std::vector<VertexSet> blocks;
};
NodeSplit split_node(const Graph& g, const VertexSet& within);

/// The unique maximal modular partition; singletons for n <= 1.
ModularPartition maximal_modular_partition(const Graph& g);

struct Quotient {
  Graph graph;
  std::vector<VertexList> blocks;
};

/// One vertex per block, blocks ordered by smallest member. Throws
/// InputError when `p` is not a partition of V and ContractError when a
/// block is not a module.
Quotient quotient(const Graph& g, const ModularPartition& p);

MDTree build_mdt(const Graph& g);

/// Vertex sets of all MDT nodes, ordered by (size, members).
std::vector<VertexList> strong_modules(const Graph& g);

/// Prime node without prime descendants; ties go to the smallest minimum id.
std::optional<VertexList> lowest_prime_module(const MDTree& t);
/// Index of that node in `t.nodes`.
std::optional<std::size_t> lowest_prime_node(const MDTree& t);

} // namespace coedit

#endif
