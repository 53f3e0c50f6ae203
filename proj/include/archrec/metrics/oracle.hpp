#ifndef ARCHREC_METRICS_ORACLE_HPP
#define ARCHREC_METRICS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "archrec/core/model.hpp"

namespace archrec::metrics {

// Exhaustive ground-truth counterparts of mojo_distance and mto_m for small
// universes (<= 8 entities). These deliberately share no code with the
// production metrics: the mojo oracle walks the full move/join operation
// graph breadth-first, the moves oracle enumerates every injective cluster
// assignment.

inline constexpr std::size_t kOracleMaxUniverse = 8;

// Minimum move/join operations from a to b by BFS over partitions.
std::int64_t oracle_mojo(const Architecture& a, const Architecture& b);

// Minimum shared-entity reassignments by brute-force assignment enumeration.
std::int64_t oracle_moves(const Architecture& a, const Architecture& b);

// Every set partition of {0, .., n-1}; clusters and partitions canonically
// ordered. Test helper for exhaustive sweeps.
std::vector<std::vector<std::vector<int>>> all_partitions(int n);

// Wraps an index partition as an Architecture over the given element names.
Architecture architecture_from_index_partition(const std::vector<std::vector<int>>& partition,
                                               const std::vector<std::string>& elements);

} // namespace archrec::metrics

#endif
