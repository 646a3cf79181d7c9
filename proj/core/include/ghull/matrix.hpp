#ifndef GHULL_MATRIX_HPP
#define GHULL_MATRIX_HPP

// Dense exact linear algebra over a FiniteField: RREF with deterministic
// pivoting, kernels, canonical subspaces and their intersections.

#include <cstddef>
#include <span>
#include <vector>

#include "ghull/finite_field.hpp"

namespace ghull {

class Matrix {
  public:
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(FieldPtr f, std::size_t n);
    static Matrix from_rows(FieldPtr f, const std::vector<std::vector<rep_t>>& rows);

    const FieldPtr& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    rep_t get(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, rep_t v) { a_[r * cols_ + c] = v; }
    std::span<const rep_t> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<rep_t> row_mut(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix transpose() const;
    Matrix entrywise_frobenius(std::uint64_t t) const;  ///< entrywise a -> a^(p^t)
    Matrix vstack(const Matrix& below) const;
    Matrix submatrix_rows(std::size_t first, std::size_t count) const;

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.f_->same(*y.f_) && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    void check_same_field(const Matrix& other) const;

    FieldPtr f_;
    std::size_t rows_, cols_;
    std::vector<rep_t> a_;
};

struct RrefResult {
    Matrix r;
    std::size_t rank;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Reduced row echelon form; pivot choice is leftmost nonzero column, first
/// eligible row, so the result is deterministic.
RrefResult rref(const Matrix& a);
std::size_t rank_of(const Matrix& a);

/// Canonical (RREF) basis of the right null space {x : A x^T = 0}, one row per
/// basis vector; 0 x cols matrix for a trivial kernel.
Matrix kernel_basis(const Matrix& a);

bool is_nonsingular(const Matrix& a);  ///< NotSquare unless square; rank == rows
Matrix inverse(const Matrix& a);       ///< Singular when rank deficient

/// Row space in canonical RREF form; equal subspaces compare bit-equal.
class Subspace {
  public:
    static Subspace span_of(const Matrix& rows);
    static Subspace zero(FieldPtr f, std::size_t ambient);

    const FieldPtr& field() const noexcept { return basis_.field(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    std::size_t ambient() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }

    Subspace intersect(const Subspace& other) const;  ///< AmbientMismatch
    Subspace sum(const Subspace& other) const;
    bool contains(std::span<const rep_t> v) const;

    friend bool operator==(const Subspace& x, const Subspace& y) { return x.basis_ == y.basis_; }

  private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

}  // namespace ghull

#endif
