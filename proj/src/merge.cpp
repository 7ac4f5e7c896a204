#include "coedit/merge.hpp"

#include <algorithm>
#include <string>

#include "coedit/errors.hpp"
#include "coedit/modular_decomposition.hpp"
#include "coedit/twins.hpp"

namespace coedit {

namespace {

std::string describe(const VertexList& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i)
    s += (i ? "," : "") + std::to_string(m[i]);
  return s + "}";
}

VertexSet checked_module(const Graph& g, const VertexList& m) {
  if (m.empty())
    throw ContractError("empty module");
  VertexSet s = to_set(m, g.order());
  if (s.count() != m.size())
    throw ContractError("module " + describe(m) + " lists a vertex twice");
  if (!is_module(g, s))
    throw ContractError(describe(m) + " is not a module");
  return s;
}

VertexList sorted_union(const std::vector<VertexList>& parts) {
  VertexList out;
  for (const auto& p : parts)
    out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

EditSet MergePlan::edits() const {
  EditSet out;
  for (const auto& step : flips)
    for (auto x : step.against_first ? first : second)
      out.insert(step.vertex, x);
  return out;
}

VertexList distinguishing_vertices(const Graph& g, const VertexList& mi, const VertexList& mj) {
  VertexSet both = to_set(mi, g.order()) | to_set(mj, g.order());
  VertexSet differ = (g.neighbors(mi.at(0)) ^ g.neighbors(mj.at(0))) - both;
  return to_list(differ);
}

namespace {

// Plan for two disjoint modules given as sets as well as lists.
MergePlan plan_unchecked(const Graph& g, const VertexList& mi, const VertexList& mj, const VertexSet& both) {
  MergePlan plan{mi, mj, {}, 0};
  // On equal sizes keep the relation to the module holding the smaller id.
  const bool prefer_first =
      mi.size() < mj.size() || (mi.size() == mj.size() && mi.front() > mj.front());
  const VertexSet differ = (g.neighbors(mi.front()) ^ g.neighbors(mj.front())) - both;
  plan.flips.reserve(differ.count());
  for (auto y = differ.find_first(); y != VertexSet::npos; y = differ.find_next(y))
    plan.flips.push_back({y, prefer_first});
  plan.cost = plan.flips.size() * (prefer_first ? mi.size() : mj.size());
  return plan;
}

} // namespace

MergePlan plan_merge(const Graph& g, const VertexList& mi, const VertexList& mj) {
  const VertexSet si = checked_module(g, mi);
  const VertexSet sj = checked_module(g, mj);
  if (si.intersects(sj))
    throw ContractError("modules " + describe(mi) + " and " + describe(mj) + " overlap");
  if (is_module(g, si | sj))
    throw ContractError(describe(mi) + " and " + describe(mj) + " already form a module");
  return plan_unchecked(g, mi, mj, si | sj);
}

MergeResult merge_pair(const Graph& g, const VertexList& mi, const VertexList& mj) {
  auto plan = plan_merge(g, mi, mj);
  MergeResult out{plan.edits(), {}};
  out.graph = apply(g, out.edits);
  return out;
}

MultiMergeResult merge_many(const Graph& g, const std::vector<VertexList>& sources) {
  if (sources.size() < 2)
    throw ContractError("merging needs at least two modules");
  const std::size_t n = g.order();
  VertexSet all(n);
  std::vector<VertexSet> sets;
  for (const auto& s : sources) {
    sets.push_back(checked_module(g, s));
    if (sets.back().intersects(all))
      throw ContractError("source " + describe(s) + " overlaps another source");
    all |= sets.back();
  }
  if (all.count() != n && is_module(g, all))
    throw ContractError("union " + describe(to_list(all)) + " is already a module");

  // Ties keep the relation to the source with the smallest id, which is a
  // property of the source collection and not of its order.
  std::size_t tie_source = 0;
  for (std::size_t i = 1; i < sources.size(); ++i)
    if (sources[i].front() < sources[tie_source].front())
      tie_source = i;

  EditSet edits;
  const VertexSet outside = ~all;
  for (auto y = outside.find_first(); y != VertexSet::npos; y = outside.find_next(y)) {
    std::uint64_t connect = 0, disconnect = 0;
    for (std::size_t i = 0; i < sources.size(); ++i)
      (g.adjacent(y, sources[i].front()) ? disconnect : connect) += sources[i].size();
    if (connect == 0 || disconnect == 0)
      continue;
    bool link = connect < disconnect;
    if (connect == disconnect)
      link = g.adjacent(y, sources[tie_source].front());
    for (const auto& s : sources)
      if (g.adjacent(y, s.front()) != link)
        for (auto x : s)
          edits.insert(y, x);
  }

  MultiMergeResult out{edits, apply(g, edits), to_list(all), {}};
  VertexSet acc = sets[0];
  EditSet taken;
  for (std::size_t t = 1; t < sets.size(); ++t) {
    acc |= sets[t];
    EditSet step;
    for (auto [u, v] : edits)
      if (acc.test(u) != acc.test(v) && !taken.contains(u, v))
        step.insert(u, v);
    taken.insert_all(step);
    out.steps.push_back(std::move(step));
  }
  return out;
}

PairChoice select_merge_pair(const Graph& g, const std::vector<VertexList>& children, std::size_t exhaustive_ties) {
  if (children.size() < 2)
    throw ContractError("pair selection needs at least two children");
  VertexSet scope(g.order());
  std::vector<VertexSet> sets;
  for (const auto& c : children) {
    sets.push_back(checked_module(g, c));
    if (scope.intersects(sets.back()))
      throw ContractError("child " + describe(c) + " overlaps another child");
    scope |= sets.back();
  }
  const auto p4_before = static_cast<std::int64_t>(count_p4s_within(g, scope));
  auto gain_of = [&](const MergePlan& plan) {
    return p4_before - static_cast<std::int64_t>(count_p4s_within(apply(g, plan.edits()), scope));
  };

  std::vector<std::pair<std::size_t, std::size_t>> cheapest;
  std::uint64_t best_cost = 0;
  std::vector<MergePlan> plans;
  for (std::size_t i = 0; i < children.size(); ++i)
    for (std::size_t j = i + 1; j < children.size(); ++j) {
      const VertexSet both = sets[i] | sets[j];
      if (is_module(g, both))
        throw ContractError(describe(children[i]) + " and " + describe(children[j]) + " already form a module");
      auto plan = plan_unchecked(g, children[i], children[j], both);
      if (cheapest.empty() || plan.cost < best_cost) {
        cheapest.clear();
        plans.clear();
        best_cost = plan.cost;
      }
      if (plan.cost == best_cost) {
        cheapest.emplace_back(i, j);
        plans.push_back(std::move(plan));
      }
    }

  PairChoice best;
  bool have = false;
  for (std::size_t c = 0; c < cheapest.size(); ++c) {
    MergePlan plan = plans[c];
    // Vertices whose two flip directions cost the same.
    std::vector<std::size_t> ties;
    if (plan.first.size() == plan.second.size())
      for (std::size_t s = 0; s < plan.flips.size(); ++s)
        ties.push_back(s);
    std::int64_t gain = gain_of(plan);
    if (ties.size() <= exhaustive_ties) {
      const MergePlan base = plan;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ties.size()); ++mask) {
        MergePlan variant = base;
        for (std::size_t t = 0; t < ties.size(); ++t)
          if ((mask >> t) & 1U)
            variant.flips[ties[t]].against_first = !variant.flips[ties[t]].against_first;
        auto vg = gain_of(variant);
        if (vg > gain) {
          gain = vg;
          plan = std::move(variant);
        }
      }
    } else {
      for (auto t : ties) {
        plan.flips[t].against_first = !plan.flips[t].against_first;
        auto vg = gain_of(plan);
        if (vg > gain)
          gain = vg;
        else
          plan.flips[t].against_first = !plan.flips[t].against_first;
      }
    }
    if (!have || gain > best.p4_gain) {
      best = {cheapest[c].first, cheapest[c].second, std::move(plan), gain};
      have = true;
    }
  }
  return best;
}

EditSet MergeTrace::edit_union() const {
  EditSet out;
  for (const auto& r : records)
    out.insert_all(r.edits);
  return out;
}

MergeTrace decompose_into_merge_trace(const Graph& g, const EditSet& f) {
  const Graph target = apply(g, f);
  if (auto check = is_cograph(target); !check) {
    const auto& w = *check.witness;
    throw RecognitionError("edited graph is not a cograph", {w.a, w.b, w.c, w.d});
  }
  if (auto bad = find_module_violation(g, target))
    throw ContractError("edit set is not module-preserving: " + describe(*bad) +
                        " is a module of the input but not of the edited graph");

  MergeTrace trace;
  Graph current = g;
  EditSet remaining = f;
  while (!is_cograph_within(current, current.full_set())) {
    const MDTree t = build_mdt(current);
    const auto& node = t.nodes[*lowest_prime_node(t)];
    const VertexSet prime = to_set(node.vertices, g.order());
    std::vector<VertexList> blocks;
    for (auto c : node.children) {
      blocks.push_back(t.nodes[c].vertices);
      if (!is_module(target, blocks.back()))
        throw ContractError("child " + describe(blocks.back()) + " of prime module " + describe(node.vertices) +
                            " is not a module of the edited graph");
    }
    const std::size_t k = blocks.size();
    Graph edited_quotient(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (target.adjacent(blocks[i][0], blocks[j][0]))
          edited_quotient.add_edge(i, j);

    // One class per round: the non-trivial twin class holding the smallest
    // child index. It cannot span every child, or the quotient would be a
    // single module.
    const auto classes = twin_partition(edited_quotient).classes;
    const auto cls = std::find_if(classes.begin(), classes.end(),
                                  [&](const TwinClass& c) { return c.vertices.size() > 1 && c.vertices.size() < k; });
    if (cls == classes.end())
      throw ContractError("edited quotient of prime module " + describe(node.vertices) +
                          " has no twin class to merge");
    MergeRecord rec;
    rec.prime_module = node.vertices;
    for (auto i : cls->vertices)
      rec.sources.push_back(blocks[i]);
    rec.merged = sorted_union(rec.sources);
    const VertexSet merged = to_set(rec.merged, g.order());
    for (auto [u, v] : f)
      if (merged.test(u) != merged.test(v))
        rec.edits.insert(u, v);
    EditSet round;
    for (auto [u, v] : remaining)
      if (merged.test(u) != merged.test(v) && prime.test(u) && prime.test(v))
        round.insert(u, v);
    if (round.empty())
      throw ContractError("edit set does not decompose into merges: no merge edits left for prime module " +
                          describe(node.vertices));
    const Graph next = apply(current, round);
    for (const auto& s : rec.sources)
      if (!is_module(current, s))
        throw ContractError("merge source " + describe(s) + " is not a module before merging");
    if (is_module(g, rec.merged) || is_module(current, rec.merged))
      throw ContractError("merged set " + describe(rec.merged) + " was already a module before merging");
    if (!is_module(next, rec.merged) || !is_module(target, rec.merged))
      throw ContractError("merged set " + describe(rec.merged) + " is not a module after merging");
    trace.records.push_back(std::move(rec));
    for (auto [u, v] : round)
      remaining.erase(u, v);
    current = next;
  }
  if (!remaining.empty())
    throw ContractError("edit set does not decompose into merges: " + std::to_string(remaining.size()) +
                        " edits left after every prime module was resolved");
  return trace;
}

} // namespace coedit
