#include "regdec/partition.hpp"

#include <algorithm>

#include "regdec/errors.hpp"

namespace regdec {

void validate_partition(const RootSystem& rs, const BlockPartition& p) {
    if (p.blocks.empty()) throw InvalidArgument("partition has no blocks");
    RootSet seen;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const auto& block = p.blocks[b];
        if (block.empty()) throw InvalidArgument("block " + std::to_string(b + 1) + " is empty");
        if (!rs.valid(block))
            throw InvalidArgument("block " + std::to_string(b + 1) + " references roots outside " +
                                  to_string(rs.type()));
        if (seen.intersects(block))
            throw InvalidArgument("block " + std::to_string(b + 1) + " overlaps an earlier block");
        seen |= block;
    }
    if (seen != rs.all()) throw InvalidArgument("blocks do not cover every root");
}

bool is_partition(const RootSystem& rs, const BlockPartition& p) {
    try {
        validate_partition(rs, p);
        return true;
    } catch (const InvalidArgument&) {
        return false;
    }
}

std::vector<int> block_assignment(const RootSystem& rs, const BlockPartition& p) {
    std::vector<int> owner(static_cast<std::size_t>(rs.size()), -1);
    for (int b = 0; b < p.num_blocks(); ++b)
        for (auto r : p.blocks[static_cast<std::size_t>(b)].members()) owner[static_cast<std::size_t>(r)] = b;
    return owner;
}

BlockPartition permute_roots(const BlockPartition& p, const std::vector<RootIndex>& perm) {
    BlockPartition out;
    out.blocks.reserve(p.blocks.size());
    for (const auto& b : p.blocks) {
        RootSet img;
        for (auto r : b.members()) img.insert(perm[static_cast<std::size_t>(r)]);
        out.blocks.push_back(img);
    }
    return out;
}

BlockPartition negate(const RootSystem& rs, const BlockPartition& p) {
    BlockPartition out;
    out.blocks.reserve(p.blocks.size());
    for (const auto& b : p.blocks) out.blocks.push_back(negate(rs, b));
    return out;
}

bool block_less(const std::vector<RootIndex>& a, const std::vector<RootIndex>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::strong_ordering operator<=>(const PartitionKey& a, const PartitionKey& b) {
    const std::size_t n = std::min(a.blocks.size(), b.blocks.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (block_less(a.blocks[i], b.blocks[i])) return std::strong_ordering::less;
        if (block_less(b.blocks[i], a.blocks[i])) return std::strong_ordering::greater;
    }
    return a.blocks.size() <=> b.blocks.size();
}

PartitionKey make_key(const BlockPartition& p, bool sort_blocks) {
    PartitionKey k;
    k.blocks.reserve(p.blocks.size());
    for (const auto& b : p.blocks) k.blocks.push_back(b.members());
    if (sort_blocks) std::sort(k.blocks.begin(), k.blocks.end(), block_less);
    return k;
}

BlockPartition from_key(const PartitionKey& k) {
    BlockPartition p;
    for (const auto& b : k.blocks) {
        RootSet s;
        for (auto r : b) s.insert(r);
        p.blocks.push_back(s);
    }
    return p;
}

}  // namespace regdec
