#ifndef COEDIT_SPIDER_HPP
#define COEDIT_SPIDER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "coedit/edit_set.hpp"
#include "coedit/graph.hpp"

namespace coedit {

enum class SpiderKind { Thin, Thick };

/// Body K, legs S, head R. `legs[i]` pairs body vertex legs[i].first with
/// leg legs[i].second; for thin spiders the pairs are edges, for thick
/// spiders they are the only non-edges between K and S.
struct SpiderDecomposition {
  SpiderKind kind = SpiderKind::Thin;
  VertexList body;
  VertexList legs_set;
  VertexList head;
  std::vector<std::pair<Vertex, Vertex>> legs; // sorted by body vertex

  friend bool operator==(const SpiderDecomposition&, const SpiderDecomposition&) = default;
};

/// Thin spiders are tried first, so P4 comes back as Thin.
std::optional<SpiderDecomposition> recognize_spider(const Graph& g);

/// True when g[M] is a spider for every prime node M of the modular decomposition.
bool is_p4_sparse(const Graph& g);

/// Removes (thin) or adds (thick) all legs except the one on the matched pair
/// holding the smallest vertex id: |K| - 1 edits. Throws ContractError when
/// the head does not induce a cograph, or the decomposition does not describe g.
EditSet edit_spider(const Graph& g, const SpiderDecomposition& d);

} // namespace coedit

#endif
