#ifndef COEDIT_HEURISTIC_HPP
#define COEDIT_HEURISTIC_HPP

#include <vector>

#include "coedit/edit_set.hpp"
#include "coedit/graph.hpp"
#include "coedit/merge.hpp"
#include "coedit/spider.hpp"

namespace coedit {

/// A lowest prime module that induced a spider and was edited directly.
struct SpiderStep {
  VertexList prime_module;
  SpiderKind kind = SpiderKind::Thin;
  EditSet edits;
};

struct HeuristicResult {
  EditSet edits;
  MergeTrace trace;
  std::vector<SpiderStep> spider_steps;
  Graph graph{0};
};

/// Repeatedly resolves a lowest prime module: spiders are edited with
/// edit_spider, anything else merges the pair chosen by select_merge_pair.
/// Throws InternalError if the round cap max(n^2, 4) is reached.
HeuristicResult heuristic_edit(const Graph& g);

} // namespace coedit

#endif
