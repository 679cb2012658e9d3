#pragma once

#include <cstdint>
#include <vector>

#include "regdec/partition.hpp"
#include "regdec/root_system.hpp"
#include "regdec/weyl.hpp"

namespace regdec {

struct EnumerationOptions {
    int min_blocks = 1;
    /// 0 means no upper bound.
    int max_blocks = 0;
    Equivalence modulo;
    std::uint64_t node_budget = 1'000'000'000;
    /// Worker threads; 1 runs the search inline.
    int jobs = 1;
    /// Number of leading roots whose assignments are split into independent tasks.
    int split_depth = 6;
};

struct EnumerationResult {
    /// Canonical representatives, sorted, one per class.
    std::vector<BlockPartition> classes;
    /// Root placements tried by the search.
    std::uint64_t node_count = 0;
    /// Regular partitions found before the equivalence quotient (block order fixed by first use).
    std::uint64_t raw_count = 0;
    double wall_seconds = 0.0;
};

/// Exhaustive search for partitions in which every block and every union of
/// two blocks is closed. Roots are placed one at a time into an existing
/// block or a single fresh block; any closure violation among the placed
/// roots prunes the branch. Throws BudgetExceeded when more than
/// `node_budget` placements are tried and InvalidArgument for systems with
/// more than 64 roots or a Weyl quotient outside type A.
EnumerationResult enumerate_regular_partitions(const RootSystem& rs, const EnumerationOptions& options);

/// Root placement order used by the search: the integral basis and its
/// negatives first, then greedily the root most constrained by those already placed.
std::vector<RootIndex> search_order(const RootSystem& rs);

}  // namespace regdec
