#ifndef COEDIT_COTREE_HPP
#define COEDIT_COTREE_HPP

#include <cstddef>
#include <vector>

#include "coedit/graph.hpp"

namespace coedit {

enum class CotreeKind { Leaf, Series, Parallel };

struct CotreeNode {
  CotreeKind kind = CotreeKind::Leaf;
  Vertex vertex = 0; // leaves only
  std::vector<std::size_t> children;

  friend bool operator==(const CotreeNode&, const CotreeNode&) = default;
};

/// Rooted series/parallel tree whose leaves are the vertices 0..n-1.
/// Node 0 is the root when the tree is non-empty; children are ordered by
/// their smallest leaf.
struct Cotree {
  std::vector<CotreeNode> nodes;

  bool empty() const noexcept { return nodes.empty(); }
  std::size_t root() const noexcept { return 0; }
  std::size_t leaf_count() const;

  friend bool operator==(const Cotree&, const Cotree&) = default;
};

/// Canonical cotree; throws RecognitionError carrying a P4 for non-cographs.
Cotree build_cotree(const Graph& g);

/// uv is an edge iff lca(u, v) is a series node. Throws InputError when the
/// leaves are not exactly 0..n-1, an inner node has fewer than two children,
/// or the node structure is not a tree rooted at node 0.
Graph cotree_to_graph(const Cotree& t);

/// No series child under series, no parallel child under parallel, inner degree >= 2.
bool is_canonical(const Cotree& t);

} // namespace coedit

#endif
