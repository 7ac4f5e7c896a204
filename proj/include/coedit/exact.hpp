#ifndef COEDIT_EXACT_HPP
#define COEDIT_EXACT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "coedit/edit_set.hpp"
#include "coedit/graph.hpp"

namespace coedit {

struct OracleLimits {
  std::size_t max_n = 8;
  std::size_t max_k = 5;
};

/// Brute force: tries edit sets by increasing size, lexicographically within
/// a size (pairs ordered (0,1) < (0,2) < ...), and returns the first one that
/// leaves a cograph. Empty optional when no set of size <= max_k works.
/// Throws CapacityError past `limits`.
std::optional<EditSet> oracle_exact_edit(const Graph& g, std::size_t max_k, const OracleLimits& limits = {});

struct WeightedEdit {
  EditSet pairs;
  std::uint64_t cost = 0;
};

/// Minimum-weight set of pair flips turning `g` into a cograph, by
/// branch-and-bound over induced P4s. `weight[u][v]` must be positive.
WeightedEdit weighted_cograph_edit(const Graph& g, const std::vector<std::vector<std::uint64_t>>& weight);

struct ExactOptions {
  /// Largest prime-node quotient the search accepts.
  std::size_t max_quotient = 12;
};

/// Optimal edit set assembled per prime node of the modular decomposition:
/// the node's quotient is edited at minimum weight |Mi|*|Mj| and every
/// flipped quotient pair is expanded to all vertex pairs between the two
/// blocks. The result keeps every module of g a module of the edited graph.
/// Throws CapacityError when a prime quotient exceeds `max_quotient`.
EditSet exact_edit(const Graph& g, const ExactOptions& options = {});

} // namespace coedit

#endif
