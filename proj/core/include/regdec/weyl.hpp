#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "regdec/partition.hpp"
#include "regdec/root_system.hpp"

namespace regdec {

/// Sequence of simple-reflection indices in [1..n]; applied right to left.
struct WeylWord {
    std::vector<int> letters;
};

/// Permutation of root indices induced by a Weyl group element.
using RootPermutation = std::vector<RootIndex>;

/// s_i(r) = r - <r, alpha_i^vee> alpha_i, with i in [1..n].
Root simple_reflection(const RootSystem& rs, int i, const Root& r);

/// The permutation of root indices induced by s_i.
RootPermutation reflection_permutation(const RootSystem& rs, int i);

/// Permutation induced by a word (rightmost letter acts first).
RootPermutation word_permutation(const RootSystem& rs, const WeylWord& w);

BlockPartition apply_word(const RootSystem& rs, const WeylWord& w, const BlockPartition& p);

/// |W| from the classical order formulas.
std::uint64_t weyl_group_order(RootSystemType t);

inline constexpr std::uint64_t kMaxWeylOrder = 10'000'000;

/// All group elements as root permutations, by closure over the simple
/// reflections. Throws CapacityError when |W| exceeds `limit`.
std::vector<RootPermutation> weyl_group_elements(const RootSystem& rs, std::uint64_t limit = kMaxWeylOrder);

/// Equivalences used to identify partitions.
struct Equivalence {
    bool renumber = false;
    bool sign = false;
    bool weyl = false;

    bool none() const { return !renumber && !sign && !weyl; }
    friend bool operator==(const Equivalence&, const Equivalence&) = default;
};

/// Parses "renumber,sign,weyl" (any subset, any order) or "none".
Equivalence parse_equivalence(std::string_view spec);
std::string to_string(const Equivalence& e);

/// Least normal form over the orbit of `p` under the chosen equivalences.
PartitionKey canonical_key(const RootSystem& rs, const BlockPartition& p, const Equivalence& modulo);

BlockPartition canonicalize(const RootSystem& rs, const BlockPartition& p, const Equivalence& modulo);

}  // namespace regdec
