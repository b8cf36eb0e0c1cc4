#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lmrd/galois.hpp"

namespace lmrd {

/// Dense matrix over GF(q), entries stored row-major as digits in [0, q).
/// Zero-row and zero-column matrices are legal. q must be a prime power
/// <= 2^16.
class MatrixGFq {
  public:
    MatrixGFq() = default;
    MatrixGFq(std::uint32_t rows, std::uint32_t cols, std::uint64_t q);
    MatrixGFq(std::uint32_t rows, std::uint32_t cols, std::uint64_t q, std::vector<std::uint16_t> entries);

    static MatrixGFq identity(std::uint32_t k, std::uint64_t q);

    std::uint32_t rows() const noexcept { return rows_; }
    std::uint32_t cols() const noexcept { return cols_; }
    std::uint64_t q() const noexcept { return q_; }
    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<std::uint16_t>& entries() const noexcept { return entries_; }

    std::uint16_t at(std::uint32_t r, std::uint32_t c) const { return entries_[std::size_t(r) * cols_ + c]; }
    void set(std::uint32_t r, std::uint32_t c, std::uint16_t v) { entries_[std::size_t(r) * cols_ + c] = v; }

    bool is_zero() const noexcept;

    friend bool operator==(const MatrixGFq& a, const MatrixGFq& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.q_ == b.q_ && a.entries_ == b.entries_;
    }

  private:
    std::uint32_t rows_ = 0;
    std::uint32_t cols_ = 0;
    std::uint64_t q_ = 2;
    FieldPtr field_;
    std::vector<std::uint16_t> entries_;
};

MatrixGFq matrix_add(const MatrixGFq& a, const MatrixGFq& b);
MatrixGFq matrix_sub(const MatrixGFq& a, const MatrixGFq& b);
MatrixGFq matrix_scale(const MatrixGFq& a, std::uint16_t c);
/// Vertical concatenation; shapes and q must agree on columns.
MatrixGFq matrix_stack(const MatrixGFq& a, const MatrixGFq& b);

/// Reduced row echelon form (Gauss-Jordan) and rank. Idempotent; preserves
/// the row space.
std::pair<MatrixGFq, std::uint32_t> rref(const MatrixGFq& m);

std::uint32_t rank(const MatrixGFq& m);

/// rank(a - b); a and b must have the same shape and q.
std::uint32_t rank_distance(const MatrixGFq& a, const MatrixGFq& b);

/// A k-dimensional subspace of F_q^n in canonical form: the basis is the
/// RREF with zero rows dropped, so equal subspaces compare equal.
class Subspace {
  public:
    Subspace() = default;

    /// Adopts a basis that is already a canonical RREF with no zero rows.
    static Subspace from_canonical(MatrixGFq basis);

    std::uint32_t ambient_dim() const noexcept { return basis_.cols(); }
    std::uint32_t dim() const noexcept { return basis_.rows(); }
    std::uint64_t q() const noexcept { return basis_.q(); }
    const MatrixGFq& basis() const noexcept { return basis_; }

    /// Pivot column of each basis row (strictly increasing).
    std::vector<std::uint32_t> pivot_columns() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator<(const Subspace& a, const Subspace& b);

  private:
    explicit Subspace(MatrixGFq basis) : basis_(std::move(basis)) {}
    MatrixGFq basis_;
};

/// Canonical row space of an arbitrary matrix.
Subspace row_space(const MatrixGFq& m);

/// dim(U cap V) = dim U + dim V - rank([U; V]). Ambient dims and q must agree.
std::uint32_t intersection_dim(const Subspace& u, const Subspace& v);

/// k - dim(U cap V); defined only for equal-dimension subspaces.
std::uint32_t injection_distance(const Subspace& u, const Subspace& v);

/// Exact minimum injection distance over all unordered pairs. Requires at
/// least two distinct codewords and size <= cap.
std::uint32_t min_injection_distance(std::span<const Subspace> codewords, std::uint64_t cap = 5000);

}  // namespace lmrd
