#pragma once

#include <cstdint>
#include <vector>

#include "lmrd/bignat.hpp"
#include "lmrd/ext_field.hpp"
#include "lmrd/linalg.hpp"

namespace lmrd {

/// Parameters of a rank-metric code in F_q^{k x w} with minimum rank
/// distance d. Requires 1 <= d <= k; w = 0 and w < d are legal and give the
/// trivial one-word code.
struct MrdParams {
    std::uint64_t q = 2;
    std::uint32_t k = 1;  // rows
    std::uint32_t w = 0;  // cols
    std::uint32_t d = 1;

    void validate() const;
};

/// |C| <= ceil(q^{max(rows,cols)(min(rows,cols)-d+1)}); the value 1 covers
/// every nonpositive exponent.
BigNat singleton_bound(std::uint64_t q, std::uint32_t rows, std::uint32_t cols, std::uint32_t d);

/// A Gabidulin code attaining the bound: messages are kappa-tuples over
/// GF(q^{m*}), codeword symbols are evaluations of the linearized polynomial
/// sum_t f_t x^{q^t} at the first ell basis monomials, symbols expanded over
/// the coefficient basis into matrix rows (k <= w) or columns (k > w).
class MrdCode {
  public:
    explicit MrdCode(MrdParams params);

    const MrdParams& params() const noexcept { return params_; }
    std::uint32_t ext_degree() const noexcept { return m_star_; }   // max(k, w)
    std::uint32_t length() const noexcept { return ell_; }          // min(k, w)
    std::uint32_t msg_dim() const noexcept { return kappa_; }       // max(0, ell - d + 1)
    const BigNat& size() const noexcept { return size_; }
    bool trivial() const noexcept { return kappa_ == 0 || params_.w == 0; }
    /// Extension field GF(q^{m*}); null for the trivial one-word code.
    const ExtFieldPtr& field() const noexcept { return ext_; }
    bool rows_orientation() const noexcept { return params_.k <= params_.w; }

    /// Evaluate the linearized polynomial with the given coefficients.
    /// message.size() must equal msg_dim() (> 0, else TrivialCode).
    MatrixGFq encode(const std::vector<ExtensionField::Elem>& message) const;

    /// Codeword for message counter index (messages enumerated base-q^{m*},
    /// least significant coefficient first).
    MatrixGFq codeword_at(std::uint64_t index) const;

  private:
    MrdParams params_;
    std::uint32_t m_star_ = 0;
    std::uint32_t ell_ = 0;
    std::uint32_t kappa_ = 0;
    BigNat size_;
    ExtFieldPtr ext_;
    // eval_pows_[t][i] = g_i^{q^t} for the eval points g_i = alpha^i
    std::vector<std::vector<ExtensionField::Elem>> eval_pows_;
};

MrdCode build_mrd(const MrdParams& params);

/// All codewords in deterministic message-counter order. Requires
/// size <= cap.
std::vector<MatrixGFq> enumerate_mrd(const MrdCode& code, const BigNat& cap);

/// Exact minimum rank distance via the minimum rank over nonzero codewords
/// (the code is linear). Requires 2 <= size <= cap.
std::uint32_t min_rank_distance(const MrdCode& code, const BigNat& cap);

/// Same value computed from the pairwise definition; kept as the slow
/// cross-check of the linearity shortcut.
std::uint32_t min_rank_distance_pairwise(const MrdCode& code, const BigNat& cap);

}  // namespace lmrd
