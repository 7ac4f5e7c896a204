#ifndef COEDIT_EDIT_SET_HPP
#define COEDIT_EDIT_SET_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>

#include "coedit/graph.hpp"

namespace coedit {

/// Set of unordered vertex pairs, each stored as (min, max). Applying an
/// edit set flips every listed pair, so applying it twice is the identity.
class EditSet {
public:
  using const_iterator = std::set<Edge>::const_iterator;

  EditSet() = default;
  EditSet(std::initializer_list<Edge> pairs);

  /// Throws InputError when u == v.
  bool insert(Vertex u, Vertex v);
  bool insert(const Edge& e) { return insert(e.first, e.second); }
  bool erase(Vertex u, Vertex v);
  bool contains(Vertex u, Vertex v) const;
  void insert_all(const EditSet& other);

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const_iterator begin() const noexcept { return pairs_.begin(); }
  const_iterator end() const noexcept { return pairs_.end(); }

  friend bool operator==(const EditSet&, const EditSet&) = default;

private:
  std::set<Edge> pairs_;
};

/// E(g) symmetric-difference f. Throws InputError for pairs out of range.
Graph apply(const Graph& g, const EditSet& f);

/// Pairs on which two graphs of equal order disagree.
EditSet difference(const Graph& a, const Graph& b);

/// A module of `g` that is not a module of `edited`, if any. Exact and
/// polynomial: every module of g is either strong or a union of children of
/// a series/parallel node, so it suffices to check strong modules plus the
/// pairwise unions of siblings under degenerate nodes.
std::optional<VertexList> find_module_violation(const Graph& g, const Graph& edited);

/// Same question answered by enumerating every module of `g`.
std::optional<VertexList> find_module_violation_exhaustive(const Graph& g, const Graph& edited,
                                                           std::size_t max_n = 12);

} // namespace coedit

#endif
