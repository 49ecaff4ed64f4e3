#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hopfpow {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Dense row-major matrix of canonical rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& values);

    /// True when every denominator is 1.
    bool is_integral() const;
    std::size_t nonzeros() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
Vector mat_vec(const ExactMatrix& a, const Vector& v);
ExactMatrix transpose(const ExactMatrix& a);
ExactMatrix subtract(const ExactMatrix& a, const ExactMatrix& b);
bool equal(const ExactMatrix& a, const ExactMatrix& b);
bool is_zero(const Vector& v);

/// Rank over Q. Integral input goes through fraction-free Bareiss elimination,
/// anything else through rational Gauss-Jordan.
std::size_t rank(const ExactMatrix& m);
/// Fraction-free Bareiss elimination; requires is_integral().
std::size_t rank_bareiss(const ExactMatrix& m);
/// Plain rational Gauss-Jordan elimination (reference path).
std::size_t rank_gauss_jordan(const ExactMatrix& m);

/// A subspace of Q^n held in canonical reduced echelon form: each basis vector
/// has value 1 at its pivot (its last nonzero coordinate), every other basis
/// vector is 0 there, and vectors are ordered by pivot. Equal subspaces have
/// identical bases.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

    /// Canonical basis of the span of `vectors`.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// v minus its components along the basis; zero at every pivot.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    friend Subspace nullspace(const ExactMatrix& m);

    std::size_t ambient_dim_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical kernel basis; dim = cols - rank.
Subspace nullspace(const ExactMatrix& m);

/// dim(U + V) computed as the rank of the concatenated bases; dim(U ∩ V) = dim U + dim V - that.
std::size_t intersect_dim(const Subspace& u, const Subspace& v);
/// Explicit intersection basis (Zassenhaus construction), canonical form.
Subspace intersection(const Subspace& u, const Subspace& v);

std::string to_string(const Vector& v);

} // namespace hopfpow
