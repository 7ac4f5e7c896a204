#ifndef COEDIT_TWINS_HPP
#define COEDIT_TWINS_HPP

#include <vector>

#include "coedit/graph.hpp"

namespace coedit {

enum class TwinKind { Singleton, True, False };

struct TwinClass {
  VertexList vertices;
  TwinKind kind = TwinKind::Singleton;

  friend bool operator==(const TwinClass&, const TwinClass&) = default;
};

/// Equivalence classes of the twin relation, ordered by smallest member.
/// Classes of size >= 2 are either all true twins (same closed
/// neighbourhood) or all false twins (same open neighbourhood).
struct TwinPartition {
  std::vector<TwinClass> classes;

  /// class_of[v] indexes `classes`.
  std::vector<std::size_t> class_of;
};

TwinPartition twin_partition(const Graph& g);
bool has_nontrivial_twins(const Graph& g);

} // namespace coedit

#endif
