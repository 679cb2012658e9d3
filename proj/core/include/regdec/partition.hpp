#pragma once

#include <compare>
#include <vector>

#include "regdec/root_system.hpp"

namespace regdec {

/// Ordered list of disjoint, nonempty root sets covering a root system.
struct BlockPartition {
    std::vector<RootSet> blocks;

    int num_blocks() const noexcept { return static_cast<int>(blocks.size()); }
    friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

/// Throws InvalidArgument unless `p` is a partition of all roots of `rs`.
void validate_partition(const RootSystem& rs, const BlockPartition& p);
bool is_partition(const RootSystem& rs, const BlockPartition& p);

/// Block index of every root (-1 for roots not covered).
std::vector<int> block_assignment(const RootSystem& rs, const BlockPartition& p);

/// Blockwise image under a permutation of root indices.
BlockPartition permute_roots(const BlockPartition& p, const std::vector<RootIndex>& perm);

/// Blockwise negation.
BlockPartition negate(const RootSystem& rs, const BlockPartition& p);

/// Integer-coded normal form of a partition: every block is its sorted
/// member list. Ordering is by block size first, then member list.
struct PartitionKey {
    std::vector<std::vector<RootIndex>> blocks;

    friend bool operator==(const PartitionKey&, const PartitionKey&) = default;
    friend std::strong_ordering operator<=>(const PartitionKey& a, const PartitionKey& b);
};

bool block_less(const std::vector<RootIndex>& a, const std::vector<RootIndex>& b);

/// Keeps block order; with `sort_blocks` the blocks are sorted by (size, members).
PartitionKey make_key(const BlockPartition& p, bool sort_blocks);
BlockPartition from_key(const PartitionKey& k);

}  // namespace regdec
