#ifndef COEDIT_MASK_GRAPH_HPP
#define COEDIT_MASK_GRAPH_HPP

// Word-sized adjacency for the exhaustive searches (at most 64 vertices).

#include <array>
#include <bit>
#include <cstdint>

#include "coedit/errors.hpp"
#include "coedit/graph.hpp"

namespace coedit::detail {

struct MaskGraph {
  int n = 0;
  std::array<std::uint64_t, 64> adj{};

  static MaskGraph from(const Graph& g) {
    if (g.order() > 64)
      throw CapacityError("mask graphs hold at most 64 vertices");
    MaskGraph m;
    m.n = static_cast<int>(g.order());
    for (auto [u, v] : g.edges())
      m.flip(static_cast<int>(u), static_cast<int>(v));
    return m;
  }

  std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
  bool adjacent(int u, int v) const { return (adj[u] >> v) & 1U; }
  void flip(int u, int v) {
    adj[u] ^= std::uint64_t{1} << v;
    adj[v] ^= std::uint64_t{1} << u;
  }
};

inline std::uint64_t component_of(const MaskGraph& g, std::uint64_t within, int start, bool co) {
  std::uint64_t comp = std::uint64_t{1} << start;
  std::uint64_t frontier = comp;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    std::uint64_t next = (co ? ~g.adj[v] : g.adj[v]) & within & ~comp;
    comp |= next;
    frontier |= next;
  }
  return comp;
}

inline bool is_cograph(const MaskGraph& g, std::uint64_t within) {
  if (std::popcount(within) <= 1)
    return true;
  int start = std::countr_zero(within);
  std::uint64_t comp = component_of(g, within, start, false);
  bool co = false;
  if (comp == within) {
    comp = component_of(g, within, start, true);
    if (comp == within)
      return false;
    co = true;
  }
  if (!is_cograph(g, comp))
    return false;
  std::uint64_t rest = within & ~comp;
  while (rest) {
    std::uint64_t c = component_of(g, rest, std::countr_zero(rest), co);
    if (!is_cograph(g, c))
      return false;
    rest &= ~c;
  }
  return true;
}

inline bool is_cograph(const MaskGraph& g) { return is_cograph(g, g.all()); }

} // namespace coedit::detail

#endif
