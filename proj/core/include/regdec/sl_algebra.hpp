#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "regdec/root_system.hpp"

namespace regdec {

using Rational = mpq_class;

/// Parses "p/q" or "p"; the result is in lowest terms.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Dense square matrix of exact rationals, 0-based element access.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

    int dim() const noexcept { return dim_; }
    Rational& operator()(int i, int j) { return a_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return a_[index(i, j)]; }

    Rational trace() const;
    bool is_zero() const;
    bool is_diagonal() const;
    const std::vector<Rational>& entries() const noexcept { return a_; }

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const Rational& s);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
    }
    int dim_ = 0;
    std::vector<Rational> a_;
};

/// ab - ba; throws InvalidArgument on a size mismatch.
RatMatrix bracket(const RatMatrix& a, const RatMatrix& b);

/// Exact span of rational vectors kept in echelon form.
class RationalSpan {
public:
    explicit RationalSpan(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds `v`; returns false when it was already in the span.
    bool add(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;

    /// Reduced row echelon basis; equal spans give equal results.
    std::vector<std::vector<Rational>> reduced_basis() const;

private:
    void reduce(std::vector<Rational>& v) const;

    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Coordinates of a Cartan element.
/// Type A: in H_1..H_n with H_i = E_{1,1} - E_{i+1,i+1}.
/// Other types: in H(alpha_1)..H(alpha_n), H(alpha) the Killing dual of alpha,
/// so H(alpha) has the root coefficients of alpha.
using CartanVector = std::vector<Rational>;

/// Matrix model of sl(n+1): unit matrices E_{i,j} (1-based), H_i, and the
/// correspondence E_{i+1,j+1} <-> -beta_i + beta_j.
class SlBasis {
public:
    explicit SlBasis(int n);

    int rank() const noexcept { return n_; }
    int matrix_dim() const noexcept { return n_ + 1; }
    int dimension() const noexcept { return (n_ + 1) * (n_ + 1) - 1; }

    /// E_{i,j}, 1-based.
    RatMatrix unit(int i, int j) const;
    /// H_i = E_{1,1} - E_{i+1,i+1}; H_0 = 0.
    RatMatrix h(int i) const;
    RatMatrix cartan_element(const CartanVector& c) const;
    /// Inverse of cartan_element on traceless diagonal matrices.
    CartanVector cartan_coords(const RatMatrix& diag) const;

    /// 1-based matrix position (row, column) of the root vector of root r.
    std::pair<int, int> position(const RootSystem& rs, RootIndex r) const;
    RootIndex root_at(const RootSystem& rs, int row, int col) const;
    RatMatrix root_vector(const RootSystem& rs, RootIndex r) const;

    /// Human-readable combination of E_{i,j} and H_i.
    std::string describe(const RatMatrix& x) const;

private:
    void check(const RootSystem& rs) const;
    int n_;
};

std::vector<Rational> flatten(const RatMatrix& m);

/// Coordinates of H_alpha = [E_alpha, E_-alpha] for root r, in the Cartan
/// basis convention of the root system's type (see CartanVector).
CartanVector cartan_of_root(const RootSystem& rs, RootIndex r);

std::string describe_cartan(const RootSystem& rs, const CartanVector& c);

}  // namespace regdec
