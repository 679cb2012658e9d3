#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regdec/partition.hpp"
#include "regdec/regular_partition.hpp"
#include "regdec/root_system.hpp"
#include "regdec/sl_algebra.hpp"

namespace regdec {

/// Cartan part plus the root spaces of `root_part`.
struct RegularSubalgebra {
    RootSet root_part;
    std::vector<CartanVector> cartan_basis;

    friend bool operator==(const RegularSubalgebra&, const RegularSubalgebra&) = default;
};

/// Direct-sum decomposition into regular subalgebras over one root system.
struct RegularDecomposition {
    RootSystemType type;
    std::vector<RegularSubalgebra> summands;

    int num_summands() const noexcept { return static_cast<int>(summands.size()); }
    friend bool operator==(const RegularDecomposition&, const RegularDecomposition&) = default;
};

/// m summands, k of them with a nonzero Cartan part.
struct DecompositionType {
    int m = 0;
    int k = 0;
    friend bool operator==(const DecompositionType&, const DecompositionType&) = default;
};

DecompositionType decomposition_type(const RegularDecomposition& d);

/// Why a decomposition was rejected. For closure failures `first`/`second`
/// are the 0-based summands whose (sum) is not closed and `left`, `right`,
/// `bracket` describe the escaping bracket.
struct VerificationWitness {
    std::optional<int> first;
    std::optional<int> second;
    std::string left;
    std::string right;
    std::string bracket;
    bool escapes_span = false;
    std::string reason;
};

struct VerificationReport {
    bool valid = false;
    DecompositionType type;
    std::optional<VerificationWitness> witness;
};

/// Matrix-commutator check that span{E_alpha, cartan} is a subalgebra of sl(n+1).
bool is_subalgebra(const RootSystem& rs, const RegularSubalgebra& s);

/// Direct-sum invariants plus closure of every summand and every pairwise
/// sum. Type A is checked with exact matrix commutators in sl(n+1); other
/// types with the root-space bracket rules (see verify_structural).
VerificationReport is_regular_decomposition(const RootSystem& rs, const RegularDecomposition& d);

/// Same verdict computed from the bracket rules of root spaces alone:
/// [g_a, g_b] = g_{a+b} when a+b is a root, [g_a, g_-a] = F*H_a, and
/// h normalizes every g_a. Works for every type.
VerificationReport verify_structural(const RootSystem& rs, const RegularDecomposition& d);

/// Forgets the Cartan parts.
BlockPartition root_partition(const RegularDecomposition& d);

enum class CartanReference {
    first_row,  ///< block of row i receives H_{beta_i}
    last_row,   ///< block of row i receives H_{beta_n - beta_i}
};

/// Extends an (m >= 3)-regular partition of A_n that is a union of whole
/// rows (or whole columns) of sl(n+1) to a regular decomposition.
RegularDecomposition extend_partition_to_decomposition(const RootSystem& rs, const BlockPartition& p,
                                                       CartanReference ref = CartanReference::first_row);

/// Explicit placement of the missing Cartan part in a two-block extension.
struct TwoBlockCartan {
    std::vector<CartanVector> first;
    std::vector<CartanVector> second;
};

/// Extends a partition into two closed subsets to a 2-regular
/// decomposition: each block keeps the algebra generated by its symmetric
/// part, and the complementary Cartan directions go to the first block
/// unless `split` places them explicitly.
RegularDecomposition extend_two_block(const RootSystem& rs, const RootSet& s1, const RootSet& s2,
                                      const std::optional<TwoBlockCartan>& split = std::nullopt);

/// (k+1, k) family for lambda a k-partition of n (k >= 2): first summand is
/// row 1 without Cartan, summand l collects rows i+1 and H_i for i in the
/// (l-1)-th window of lambda over 1..n.
RegularDecomposition construct_k1k(const RootSystem& rs, const IntPartition& lambda);

/// The same family written on the beta-chain with (lambda, 1) a partition of
/// n+1: summand l gets rows i in the l-th window and H_{beta_n - beta_i},
/// the last summand is row n+1 without Cartan.
RegularDecomposition construct_k1k_beta_form(const RootSystem& rs, const IntPartition& lambda);

/// (k, k) family for lambda a k-partition of n (k >= 2): first summand has
/// rows 1..lambda_1+1 with H_1..H_lambda_1 and X, summand l has the rows of
/// its window with H_i - X. X must lie in span{H_1..H_lambda_1} or equal
/// H_p for p in the window of a later part with lambda_q > 1.
RegularDecomposition construct_kk(const RootSystem& rs, const IntPartition& lambda, const CartanVector& x);

/// Throws InvalidArgument naming the violated condition when `x` is not admissible.
void check_kk_admissible(const IntPartition& lambda, const CartanVector& x);

/// Moves the root vector of `r` into summand `to` (0-based).
RegularDecomposition move_root_vector(const RegularDecomposition& d, RootIndex r, int to);

/// Whether two decompositions of sl(n+1) agree after renumbering summands and
/// conjugating by a permutation matrix (and optionally swapping signs).
bool weyl_equivalent(const RootSystem& rs, const RegularDecomposition& a, const RegularDecomposition& b,
                     bool allow_sign = false);

}  // namespace regdec
