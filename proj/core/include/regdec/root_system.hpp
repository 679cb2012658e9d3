#pragma once

#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace regdec {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan-Killing type of a finite irreducible root system.
struct RootSystemType {
    Family family = Family::A;
    int rank = 1;

    friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

/// Validates family/rank (A_n n>=1, B_n n>=2, C_n n>=3, D_n n>=4, E_6..8, F_4, G_2).
RootSystemType make_type(char family, int rank);
RootSystemType make_type(Family family, int rank);
std::string to_string(RootSystemType t);
char family_letter(Family f);

/// Integer coordinates of a lattice vector in the simple-root basis.
using Coeffs = std::vector<int>;

/// A root given by its coordinates in the simple-root basis.
class Root {
public:
    Root() = default;
    explicit Root(Coeffs coeffs) : coeffs_(std::move(coeffs)) {}

    const Coeffs& coeffs() const noexcept { return coeffs_; }
    int rank() const noexcept { return static_cast<int>(coeffs_.size()); }
    int operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_positive() const;
    int height() const;

    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b) { return a + (-b); }

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;

private:
    Coeffs coeffs_;
};

std::string to_string(const Root& r);

using RootIndex = int;

/// Largest root system handled (E_8 has 240 roots).
inline constexpr std::size_t kMaxRoots = 256;

/// Subset of the roots of one RootSystem, addressed by root index.
class RootSet {
public:
    RootSet() = default;
    RootSet(std::initializer_list<RootIndex> members);

    void insert(RootIndex i) { bits_.set(static_cast<std::size_t>(i)); }
    void erase(RootIndex i) { bits_.reset(static_cast<std::size_t>(i)); }
    bool contains(RootIndex i) const { return bits_.test(static_cast<std::size_t>(i)); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    /// Members in increasing index order.
    std::vector<RootIndex> members() const;

    bool intersects(const RootSet& o) const { return (bits_ & o.bits_).any(); }
    bool is_subset_of(const RootSet& o) const { return (bits_ & ~o.bits_).none(); }

    RootSet& operator|=(const RootSet& o) {
        bits_ |= o.bits_;
        return *this;
    }
    RootSet& operator&=(const RootSet& o) {
        bits_ &= o.bits_;
        return *this;
    }
    friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
    friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
    friend RootSet operator-(const RootSet& a, const RootSet& b) {
        RootSet r;
        r.bits_ = a.bits_ & ~b.bits_;
        return r;
    }
    friend bool operator==(const RootSet&, const RootSet&) = default;

private:
    std::bitset<kMaxRoots> bits_;
};

/// Square integer matrix with a[i][j] = <alpha_i, alpha_j^vee>.
class CartanMatrix {
public:
    CartanMatrix() = default;
    explicit CartanMatrix(std::vector<std::vector<int>> entries);

    int rank() const noexcept { return static_cast<int>(entries_.size()); }
    int operator()(int i, int j) const { return entries_[i][j]; }
    const std::vector<std::vector<int>>& entries() const noexcept { return entries_; }

private:
    std::vector<std::vector<int>> entries_;
};

CartanMatrix cartan_matrix(RootSystemType t);

/// Full finite root system with negation map and sum table.
///
/// Index layout: positive roots sorted by height, then by descending
/// coefficient vector, so the simple roots occupy indices 0..n-1 in
/// Dynkin order; negative roots follow in the same order, i.e.
/// neg(i) == i + size()/2 for positive i.
///
/// Simple-root orderings: B_n has the short root last, C_n the long root
/// last, D_n attaches alpha_{n-1} and alpha_n to alpha_{n-2}, E_n attaches
/// alpha_{n-1} to alpha_{n-3} and alpha_n to alpha_{n-1}, F_4 has alpha_1,
/// alpha_2 long, G_2 has alpha_1 short.
class RootSystem {
public:
    explicit RootSystem(RootSystemType type);

    RootSystemType type() const noexcept { return type_; }
    int rank() const noexcept { return type_.rank; }
    int size() const noexcept { return static_cast<int>(roots_.size()); }
    int num_positive() const noexcept { return size() / 2; }

    const Root& root(RootIndex i) const { return roots_.at(static_cast<std::size_t>(i)); }
    const std::vector<Root>& roots() const noexcept { return roots_; }
    const CartanMatrix& cartan() const noexcept { return cartan_; }

    std::optional<RootIndex> index_of(const Coeffs& c) const;
    std::optional<RootIndex> index_of(const Root& r) const { return index_of(r.coeffs()); }
    /// Throws InvalidArgument when `c` is not a root.
    RootIndex require_index(const Coeffs& c) const;

    RootIndex neg(RootIndex i) const { return neg_[static_cast<std::size_t>(i)]; }
    bool is_positive(RootIndex i) const { return i < num_positive(); }

    /// Index of roots[i] + roots[j] when that sum is a root.
    std::optional<RootIndex> sum(RootIndex i, RootIndex j) const {
        auto s = sum_[static_cast<std::size_t>(i) * roots_.size() + static_cast<std::size_t>(j)];
        if (s < 0) return std::nullopt;
        return s;
    }

    RootSet all() const;
    RootSet positive() const;
    RootSet negative() const;

    bool valid(const RootSet& s) const;

private:
    RootSystemType type_;
    CartanMatrix cartan_;
    std::vector<Root> roots_;
    std::vector<RootIndex> neg_;
    std::vector<std::int16_t> sum_;
    std::map<Coeffs, RootIndex> lookup_;
};

RootSystem build_root_system(RootSystemType t);

/// True iff every realizable sum of two members is again a member.
bool is_closed(const RootSystem& rs, const RootSet& s);

/// s intersected with -s.
RootSet symmetric_part(const RootSystem& rs, const RootSet& s);

/// -s.
RootSet negate(const RootSystem& rs, const RootSet& s);

/// Integral basis used for the partition graph: the beta-chain
/// beta_i = alpha_1 + ... + alpha_i for A/B/C/F, the gamma-basis for D/E
/// (last one or two members re-routed through the fork) and {alpha, beta}
/// for G_2.
std::vector<RootIndex> beta_chain_basis(const RootSystem& rs);

/// Coordinates of beta_i = alpha_1 + ... + alpha_i (i = 0 gives the zero vector).
Coeffs beta_coeffs(int rank, int i);

/// A_n root written as beta_j - beta_i with 0 <= i != j <= n (beta_0 = 0).
struct BetaDifference {
    int i = 0;
    int j = 0;
    friend bool operator==(const BetaDifference&, const BetaDifference&) = default;
};

/// Requires a type A system.
BetaDifference beta_difference(const RootSystem& rs, RootIndex r);
RootIndex beta_difference_index(const RootSystem& rs, BetaDifference d);

}  // namespace regdec
