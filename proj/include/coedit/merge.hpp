#ifndef COEDIT_MERGE_HPP
#define COEDIT_MERGE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coedit/edit_set.hpp"
#include "coedit/graph.hpp"

namespace coedit {

/// Make `vertex` agree with the other module by flipping all its pairs to
/// the first module (`against_first`) or to the second one.
struct FlipStep {
  Vertex vertex = 0;
  bool against_first = true;

  friend bool operator==(const FlipStep&, const FlipStep&) = default;
};

/// Edits that turn first ∪ second into a module. `flips` covers exactly the
/// vertices outside both modules that see one of them but not the other.
struct MergePlan {
  VertexList first;
  VertexList second;
  std::vector<FlipStep> flips;
  std::uint64_t cost = 0;

  EditSet edits() const;
};

/// Default plan: each vertex is flipped against the smaller module; on equal
/// sizes the relation to the module holding the smaller vertex id is kept.
/// Throws
/// ContractError unless mi, mj are non-empty disjoint modules whose union
/// is not already a module.
MergePlan plan_merge(const Graph& g, const VertexList& mi, const VertexList& mj);

struct MergeResult {
  EditSet edits;
  Graph graph;
};

MergeResult merge_pair(const Graph& g, const VertexList& mi, const VertexList& mj);

struct MultiMergeResult {
  EditSet edits;
  Graph graph;
  VertexList merged;
  /// steps[t] holds the edits that joined sources[t+1] to the union of the
  /// earlier sources, in the order given.
  std::vector<EditSet> steps;
};

/// Merges all sources into one module. The target graph is fixed before
/// folding: every outside vertex ends up fully adjacent or fully
/// non-adjacent to the union, whichever needs fewer flips (ties keep its
/// relation to the source holding the smallest id, which reduces to
/// the merge_pair rule for two sources). Relations between the sources are
/// left alone, so the result does not depend on the order of `sources`.
/// Throws ContractError for overlapping sources, non-modules, or a union
/// other than V that is already a module.
MultiMergeResult merge_many(const Graph& g, const std::vector<VertexList>& sources);

/// Vertices outside both modules whose adjacency to them differs.
VertexList distinguishing_vertices(const Graph& g, const VertexList& mi, const VertexList& mj);

struct PairChoice {
  std::size_t first = 0; // indices into the children list, first < second
  std::size_t second = 0;
  MergePlan plan;
  /// Induced P4s inside the union of the children before minus after the plan.
  std::int64_t p4_gain = 0;
};

/// Picks the child pair that is cheapest to merge and, among those, the plan
/// removing the most induced P4s from the union of `children`. Equal-cost
/// flip directions are explored exhaustively when there are at most
/// `exhaustive_ties` of them, greedily otherwise. Remaining ties go to the
/// pair with the smallest child indices.
PairChoice select_merge_pair(const Graph& g, const std::vector<VertexList>& children,
                             std::size_t exhaustive_ties = 4);

struct MergeRecord {
  /// Prime module whose children were merged.
  VertexList prime_module;
  std::vector<VertexList> sources;
  VertexList merged;
  /// Edits of the full edit set with exactly one endpoint in `merged`.
  EditSet edits;
};

struct MergeTrace {
  std::vector<MergeRecord> records;

  EditSet edit_union() const;
};

/// Replays an optimal module-preserving edit set as successive merges of
/// children of lowest prime modules. Each round takes the non-trivial twin
/// class of the edited quotient with the smallest member, records it, and
/// applies the remaining edits joining it to the rest of the prime module.
/// Throws RecognitionError when g△f is not a cograph, ContractError when f
/// is not module-preserving or the replay cannot explain every edit.
MergeTrace decompose_into_merge_trace(const Graph& g, const EditSet& f);

} // namespace coedit

#endif
