#ifndef COEDIT_TEST_EDIT_PROPS_HPP
#define COEDIT_TEST_EDIT_PROPS_HPP

#include <algorithm>
#include <optional>
#include <string>

#include "coedit/edit_set.hpp"
#include "coedit/merge.hpp"
#include "coedit/modular_decomposition.hpp"
#include "coedit/twins.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace props {

using coedit::EditSet;

inline std::string show(const VertexList& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// Every module of g (subset oracle) is a module of g△f.
inline std::optional<std::string> module_preservation_failure(const Graph& g, const EditSet& f) {
  const Graph h = coedit::apply(g, f);
  for (auto m : oracle::modules(g))
    if (!oracle::is_module(h, m))
      return "module " + show(oracle::list_of(m)) + " is lost";
  return std::nullopt;
}

// No edited pair lies inside one twin class of g△f.
inline std::optional<std::string> twin_safety_failure(const Graph& g, const EditSet& f) {
  const auto p = coedit::twin_partition(coedit::apply(g, f));
  for (auto [u, v] : f)
    if (p.class_of[u] == p.class_of[v])
      return "edit " + std::to_string(u) + "-" + std::to_string(v) + " is inside a twin class";
  return std::nullopt;
}

// Merge trace replay succeeds and the record edits cover f exactly.
inline std::optional<std::string> trace_failure(const Graph& g, const EditSet& f) {
  try {
    const auto trace = coedit::decompose_into_merge_trace(g, f);
    if (trace.edit_union() != f)
      return "trace union differs from the edit set";
    const Graph h = coedit::apply(g, f);
    for (const auto& r : trace.records) {
      if (!oracle::is_module(h, oracle::mask_of(r.merged)))
        return "merged set " + show(r.merged) + " is not a module of the result";
      if (oracle::is_module(g, oracle::mask_of(r.merged)))
        return "merged set " + show(r.merged) + " was a module of the input";
      for (auto [u, v] : r.edits) {
        const bool iu = std::binary_search(r.merged.begin(), r.merged.end(), u);
        const bool iv = std::binary_search(r.merged.begin(), r.merged.end(), v);
        if (iu == iv)
          return "record edit does not cross its merged set";
      }
    }
  } catch (const std::exception& e) {
    return std::string("replay failed: ") + e.what();
  }
  return std::nullopt;
}

// g△f divided by Pmax(g) is a cograph.
inline std::optional<std::string> pmax_quotient_failure(const Graph& g, const EditSet& f) {
  if (g.order() < 2)
    return std::nullopt;
  const auto q = coedit::quotient(coedit::apply(g, f), coedit::maximal_modular_partition(g));
  if (!oracle::is_cograph(q.graph))
    return "quotient by Pmax is not a cograph";
  return std::nullopt;
}

// A prime input never ends as a single twin class.
inline std::optional<std::string> prime_collapse_failure(const Graph& g, const EditSet& f) {
  const auto t = coedit::build_mdt(g);
  if (t.empty() || t.nodes[0].kind != MdKind::Prime)
    return std::nullopt;
  if (coedit::twin_partition(coedit::apply(g, f)).classes.size() == 1)
    return "prime input became one twin class";
  return std::nullopt;
}

// All orders of a three-way merge agree, and the step edits split the
// total as F(a+b -> ab) disjoint-union F(ab+c -> abc).
inline std::optional<std::string> three_way_merge_failure(const Graph& g, std::vector<VertexList> sources) {
  std::sort(sources.begin(), sources.end());
  std::optional<coedit::MultiMergeResult> first;
  do {
    const auto r = coedit::merge_many(g, sources);
    if (!first)
      first = r;
    else if (r.graph != first->graph || r.merged != first->merged || r.edits != first->edits)
      return "merge order changes the result";
    if (r.steps.size() != 2)
      return "expected two fold steps";
    VertexList ab = sources[0];
    ab.insert(ab.end(), sources[1].begin(), sources[1].end());
    std::sort(ab.begin(), ab.end());
    EditSet crossing_ab, rest, both;
    for (auto [u, v] : r.edits) {
      const bool in_u = std::binary_search(ab.begin(), ab.end(), u);
      const bool in_v = std::binary_search(ab.begin(), ab.end(), v);
      (in_u != in_v ? crossing_ab : rest).insert(u, v);
    }
    if (r.steps[0] != crossing_ab || r.steps[1] != rest)
      return "step edits do not follow the recurrence";
    both = r.steps[0];
    for (auto e : r.steps[1])
      if (!both.insert(e))
        return "step edit sets overlap";
    if (both != r.edits)
      return "step edit sets do not cover the merge edits";
    for (auto [u, v] : r.edits) {
      const bool in_u = std::binary_search(r.merged.begin(), r.merged.end(), u);
      const bool in_v = std::binary_search(r.merged.begin(), r.merged.end(), v);
      if (in_u == in_v)
        return "merge edit does not cross the merged set";
    }
    if (!oracle::is_module(r.graph, oracle::mask_of(r.merged)))
      return "merged set is not a module afterwards";
    for (const auto& s : sources)
      if (!oracle::is_module(r.graph, oracle::mask_of(s)))
        return "a source stopped being a module";
  } while (std::next_permutation(sources.begin(), sources.end()));
  return std::nullopt;
}

} // namespace props

#endif
