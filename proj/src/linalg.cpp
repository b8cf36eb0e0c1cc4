#include "lmrd/linalg.hpp"

#include <algorithm>

#include "lmrd/kernels.hpp"

namespace lmrd {

MatrixGFq::MatrixGFq(std::uint32_t rows, std::uint32_t cols, std::uint64_t q)
    : MatrixGFq(rows, cols, q, std::vector<std::uint16_t>(std::size_t(rows) * cols, 0)) {}

MatrixGFq::MatrixGFq(std::uint32_t rows, std::uint32_t cols, std::uint64_t q, std::vector<std::uint16_t> entries)
    : rows_(rows), cols_(cols), q_(q), entries_(std::move(entries)) {
    if (q > (std::uint64_t(1) << 16)) fail(ErrorKind::InvalidParams, "matrix field size exceeds 2^16");
    field_ = FieldSpec::for_size(q);
    if (entries_.size() != std::size_t(rows_) * cols_)
        fail(ErrorKind::ShapeMismatch, "entry count does not match rows*cols");
    for (std::uint16_t e : entries_)
        if (e >= q_) fail(ErrorKind::BadInput, "matrix entry out of range for GF(q)");
}

MatrixGFq MatrixGFq::identity(std::uint32_t k, std::uint64_t q) {
    MatrixGFq m(k, k, q);
    for (std::uint32_t i = 0; i < k; ++i) m.set(i, i, 1);
    return m;
}

bool MatrixGFq::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint16_t e) { return e == 0; });
}

namespace {
void require_same_shape(const MatrixGFq& a, const MatrixGFq& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::ShapeMismatch, "matrix shapes differ");
    if (a.q() != b.q()) fail(ErrorKind::ShapeMismatch, "matrix field sizes differ");
}
}  // namespace

MatrixGFq matrix_add(const MatrixGFq& a, const MatrixGFq& b) {
    require_same_shape(a, b);
    const FieldSpec& f = *a.field();
    std::vector<std::uint16_t> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint16_t>(f.add(a.entries()[i], b.entries()[i]));
    return {a.rows(), a.cols(), a.q(), std::move(out)};
}

MatrixGFq matrix_sub(const MatrixGFq& a, const MatrixGFq& b) {
    require_same_shape(a, b);
    const FieldSpec& f = *a.field();
    std::vector<std::uint16_t> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint16_t>(f.sub(a.entries()[i], b.entries()[i]));
    return {a.rows(), a.cols(), a.q(), std::move(out)};
}

MatrixGFq matrix_scale(const MatrixGFq& a, std::uint16_t c) {
    const FieldSpec& f = *a.field();
    std::vector<std::uint16_t> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint16_t>(f.mul(a.entries()[i], c));
    return {a.rows(), a.cols(), a.q(), std::move(out)};
}

MatrixGFq matrix_stack(const MatrixGFq& a, const MatrixGFq& b) {
    if (a.cols() != b.cols() || a.q() != b.q()) fail(ErrorKind::ShapeMismatch, "stack requires equal column counts");
    std::vector<std::uint16_t> out;
    out.reserve(a.entries().size() + b.entries().size());
    out.insert(out.end(), a.entries().begin(), a.entries().end());
    out.insert(out.end(), b.entries().begin(), b.entries().end());
    return {a.rows() + b.rows(), a.cols(), a.q(), std::move(out)};
}

std::pair<MatrixGFq, std::uint32_t> rref(const MatrixGFq& m) {
    const FieldSpec& f = *m.field();
    const std::uint32_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint16_t> a = m.entries();
    auto at = [&](std::uint32_t r, std::uint32_t c) -> std::uint16_t& { return a[std::size_t(r) * cols + c]; };

    std::uint32_t pivot_row = 0;
    for (std::uint32_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::uint32_t sel = pivot_row;
        while (sel < rows && at(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row)
            for (std::uint32_t c = col; c < cols; ++c) std::swap(at(sel, c), at(pivot_row, c));

        const std::uint64_t pinv = f.inv(at(pivot_row, col));
        for (std::uint32_t c = col; c < cols; ++c)
            at(pivot_row, c) = static_cast<std::uint16_t>(f.mul(at(pivot_row, c), pinv));

        for (std::uint32_t r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            const std::uint16_t factor = at(r, col);
            if (factor == 0) continue;
            for (std::uint32_t c = col; c < cols; ++c)
                at(r, c) = static_cast<std::uint16_t>(f.sub(at(r, c), f.mul(factor, at(pivot_row, c))));
        }
        ++pivot_row;
    }
    return {MatrixGFq(rows, cols, m.q(), std::move(a)), pivot_row};
}

std::uint32_t rank(const MatrixGFq& m) {
    // forward elimination only; no back substitution needed for the rank
    const FieldSpec& f = *m.field();
    const std::uint32_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint16_t> a = m.entries();
    auto at = [&](std::uint32_t r, std::uint32_t c) -> std::uint16_t& { return a[std::size_t(r) * cols + c]; };

    std::uint32_t rk = 0;
    for (std::uint32_t col = 0; col < cols && rk < rows; ++col) {
        std::uint32_t sel = rk;
        while (sel < rows && at(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != rk)
            for (std::uint32_t c = col; c < cols; ++c) std::swap(at(sel, c), at(rk, c));
        const std::uint64_t pinv = f.inv(at(rk, col));
        for (std::uint32_t r = rk + 1; r < rows; ++r) {
            const std::uint16_t factor = at(r, col);
            if (factor == 0) continue;
            const std::uint64_t scaled = f.mul(factor, pinv);
            for (std::uint32_t c = col; c < cols; ++c)
                at(r, c) = static_cast<std::uint16_t>(f.sub(at(r, c), f.mul(scaled, at(rk, c))));
        }
        ++rk;
    }
    return rk;
}

std::uint32_t rank_distance(const MatrixGFq& a, const MatrixGFq& b) {
    require_same_shape(a, b);
    return rank(matrix_sub(a, b));
}

Subspace Subspace::from_canonical(MatrixGFq basis) { return Subspace(std::move(basis)); }

std::vector<std::uint32_t> Subspace::pivot_columns() const {
    std::vector<std::uint32_t> pivots;
    pivots.reserve(dim());
    for (std::uint32_t r = 0; r < dim(); ++r) {
        std::uint32_t c = 0;
        while (c < ambient_dim() && basis_.at(r, c) == 0) ++c;
        pivots.push_back(c);
    }
    return pivots;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.q() != b.q()) return a.q() < b.q();
    if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis_.entries() < b.basis_.entries();
}

Subspace row_space(const MatrixGFq& m) {
    auto [r, rk] = rref(m);
    std::vector<std::uint16_t> basis(r.entries().begin(), r.entries().begin() + std::size_t(rk) * m.cols());
    return Subspace::from_canonical(MatrixGFq(rk, m.cols(), m.q(), std::move(basis)));
}

std::uint32_t intersection_dim(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || u.q() != v.q())
        fail(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
    const std::uint32_t stacked_rank = rank(matrix_stack(u.basis(), v.basis()));
    return u.dim() + v.dim() - stacked_rank;
}

std::uint32_t injection_distance(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim() || u.q() != v.q())
        fail(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
    if (u.dim() != v.dim())
        fail(ErrorKind::DimensionMismatch, "injection distance requires equal-dimension subspaces");
    return u.dim() - intersection_dim(u, v);
}

std::uint32_t min_injection_distance(std::span<const Subspace> codewords, std::uint64_t cap) {
    if (codewords.size() < 2) fail(ErrorKind::TooFewCodewords, "need at least two codewords");
    if (codewords.size() > cap) fail(ErrorKind::CapExceeded, "codeword count exceeds the verification cap");
    return kernels::min_pairwise_injection_distance(codewords);
}

}  // namespace lmrd
