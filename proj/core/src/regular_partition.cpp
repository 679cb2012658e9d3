#include "regdec/regular_partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "regdec/errors.hpp"

namespace regdec {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidArgument("integer partition needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidArgument("integer partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("integer partition parts must be non-increasing");
        total_ += parts_[i];
    }
}

IntPartition IntPartition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
            throw InvalidArgument("cannot parse integer partition '" + std::string(text) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return IntPartition(std::move(parts));
}

std::string to_string(const IntPartition& l) {
    std::string s = "(";
    for (int i = 0; i < l.num_parts(); ++i) {
        if (i) s += ",";
        s += std::to_string(l[static_cast<std::size_t>(i)]);
    }
    return s + ")";
}

std::optional<ClosureViolation> find_regularity_violation(const RootSystem& rs, const BlockPartition& p) {
    validate_partition(rs, p);
    const auto owner = block_assignment(rs, p);
    for (RootIndex x = 0; x < rs.size(); ++x)
        for (RootIndex y = x + 1; y < rs.size(); ++y) {
            auto z = rs.sum(x, y);
            if (!z) continue;
            const int bx = owner[static_cast<std::size_t>(x)];
            const int by = owner[static_cast<std::size_t>(y)];
            const int bz = owner[static_cast<std::size_t>(*z)];
            if (bz != bx && bz != by) return ClosureViolation{bx, by, x, y, *z};
        }
    return std::nullopt;
}

bool is_regular_partition(const RootSystem& rs, const BlockPartition& p) {
    return !find_regularity_violation(rs, p).has_value();
}

BlockPartition finest_partition(const RootSystem& rs, Orientation orientation) {
    if (rs.type().family != Family::A)
        throw InvalidArgument("finest partitions are defined for type A only, got " + to_string(rs.type()));
    const int n = rs.rank();
    if (n < 2) throw InvalidArgument("finest partitions require rank n >= 2");
    BlockPartition p;
    for (int i = 0; i <= n; ++i) {
        RootSet block;
        for (int j = 0; j <= n; ++j)
            if (j != i) block.insert(beta_difference_index(rs, {i, j}));
        p.blocks.push_back(block);
    }
    return orientation == Orientation::row ? p : negate(rs, p);
}

BlockPartition partition_from_int_partition(const RootSystem& rs, const IntPartition& lambda) {
    if (rs.type().family != Family::A)
        throw InvalidArgument("integer-partition constructor requires type A, got " + to_string(rs.type()));
    const int n = rs.rank();
    if (lambda.total() != n + 1)
        throw InvalidArgument("lambda " + to_string(lambda) + " must sum to n+1 = " + std::to_string(n + 1));
    if (lambda.num_parts() < 2) throw InvalidArgument("lambda needs at least two parts to give a partition");
    BlockPartition p;
    int source = 0;
    for (auto part : lambda.parts()) {
        RootSet block;
        for (int i = source; i < source + part; ++i)
            for (int j = 0; j <= n; ++j)
                if (j != i) block.insert(beta_difference_index(rs, {i, j}));
        source += part;
        p.blocks.push_back(block);
    }
    return p;
}

BlockPartition coarsen(const BlockPartition& p, const std::vector<std::vector<int>>& merge_spec) {
    std::vector<bool> used(p.blocks.size(), false);
    BlockPartition out;
    for (const auto& group : merge_spec) {
        if (group.empty()) throw InvalidArgument("merge spec contains an empty group");
        RootSet merged;
        for (int b : group) {
            if (b < 0 || b >= p.num_blocks())
                throw InvalidArgument("merge spec references block " + std::to_string(b) + " outside [0," +
                                      std::to_string(p.num_blocks()) + ")");
            if (used[static_cast<std::size_t>(b)])
                throw InvalidArgument("merge spec uses block " + std::to_string(b) + " twice");
            used[static_cast<std::size_t>(b)] = true;
            merged |= p.blocks[static_cast<std::size_t>(b)];
        }
        out.blocks.push_back(merged);
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw InvalidArgument("merge spec does not cover every block");
    return out;
}

std::uint64_t stirling2(int n, int k) {
    if (n < 0 || k < 0) throw InvalidArgument("Stirling numbers need non-negative arguments");
    if (k > n) return 0;
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n + 1),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(k + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[i][j] = static_cast<std::uint64_t>(j) * s[i - 1][j] + s[i - 1][j - 1];
    return s[n][k];
}

std::uint64_t stirling_count_upper(int n) {
    if (n < 2) throw InvalidArgument("stirling_count_upper requires n >= 2");
    std::uint64_t total = 0;
    for (int k = 3; k <= n + 1; ++k) total += stirling2(n + 1, k);
    return total;
}

std::vector<IntPartition> integer_partitions(int total, int min_parts, int max_parts) {
    std::vector<IntPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            const int m = static_cast<int>(cur.size());
            if (m >= min_parts && m <= max_parts) out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_parts) return;
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    if (total > 0) rec(total, total);
    return out;
}

}  // namespace regdec
