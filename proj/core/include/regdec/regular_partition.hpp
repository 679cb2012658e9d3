#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "regdec/partition.hpp"
#include "regdec/root_system.hpp"

namespace regdec {

/// Non-increasing positive parts lambda_1 >= ... >= lambda_m.
class IntPartition {
public:
    IntPartition() = default;
    explicit IntPartition(std::vector<int> parts);

    /// Parses "2,1,1".
    static IntPartition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
    int total() const noexcept { return total_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const IntPartition&, const IntPartition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

std::string to_string(const IntPartition& l);

/// Two roots whose sum lands outside the union of their blocks.
struct ClosureViolation {
    int block_a = 0;  ///< block of `x` (0-based)
    int block_b = 0;  ///< block of `y` (0-based); equals block_a for a single-block failure
    RootIndex x = 0;
    RootIndex y = 0;
    RootIndex sum = 0;
};

/// First violation in (x, y) lexicographic order, if any.
std::optional<ClosureViolation> find_regularity_violation(const RootSystem& rs, const BlockPartition& p);

/// Every block and every union of two blocks is closed.
bool is_regular_partition(const RootSystem& rs, const BlockPartition& p);

enum class Orientation { row, column };

/// The two finest (n+1)-block regular partitions of A_n:
/// row block i = {-beta_i + beta_j : j != i}, column = its negation.
BlockPartition finest_partition(const RootSystem& rs, Orientation orientation);

/// Row-form partition whose l-th block collects the rows in the l-th
/// consecutive window of sizes lambda (lambda a partition of n+1, m >= 2).
BlockPartition partition_from_int_partition(const RootSystem& rs, const IntPartition& lambda);

/// Unions blocks per `merge_spec`, a set partition of the 0-based block indices.
BlockPartition coarsen(const BlockPartition& p, const std::vector<std::vector<int>>& merge_spec);

/// Stirling numbers of the second kind.
std::uint64_t stirling2(int n, int k);

/// Sum_{k=3}^{n+1} S(n+1, k): classes of (m >= 3)-regular partitions of A_n
/// modulo renumbering and sign swap.
std::uint64_t stirling_count_upper(int n);

/// All partitions of `total` with between min_parts and max_parts parts,
/// in reverse lexicographic order.
std::vector<IntPartition> integer_partitions(int total, int min_parts, int max_parts);

}  // namespace regdec
