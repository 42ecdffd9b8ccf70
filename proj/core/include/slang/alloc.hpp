// alloc.hpp -- bounded single-resource allocation: a fixed request sequence
// is turned into a constraint network whose scenarios are all schedules
// compatible with mutual exclusion, request/grant cycles and FIFO grants.
#pragma once

#include <cstdint>
#include <vector>

#include "slang/network.hpp"

namespace slang {

/// k requesters and the total order of their request starts. Requester i's
/// request count is its multiplicity in the sequence.
struct AllocationInstance {
    std::uint32_t requesters = 0;        // k >= 1
    std::vector<std::uint32_t> requests; // 1-based requester ids, nonempty

    void validate() const; // DomainError on violation
};

/// Items: per requester the letters r_i, r_i_bar, g_i, g_i_bar, each with as
/// many occurrences as it has requests. Constraints: the grant-exclusion
/// chain following the request order, one request/grant/release/deallocate
/// cycle word per requester, and the FIFO grant-order word.
ConstraintNetwork allocation_network(const AllocationInstance& instance);

struct AllocationSolution {
    SLanguage scenarios;
    PrecedenceGraph graph;
};

/// Solves the instance's network and derives its precedence Hasse graph.
/// With `forbid_simultaneity`, scenarios containing any fused S-letter are
/// filtered out before the graph is built.
AllocationSolution allocation_solve(const AllocationInstance& instance,
                                    const SolveOptions& options = {},
                                    bool forbid_simultaneity = false);

} // namespace slang
