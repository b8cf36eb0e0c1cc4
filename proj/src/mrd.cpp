#include "lmrd/mrd.hpp"

#include <algorithm>

#include "lmrd/kernels.hpp"

namespace lmrd {

void MrdParams::validate() const {
    if (k < 1) fail(ErrorKind::InvalidParams, "k must be >= 1");
    if (d < 1 || d > k) fail(ErrorKind::InvalidParams, "need 1 <= d <= k");
    if (q < 2) fail(ErrorKind::InvalidParams, "q must be >= 2");
}

BigNat singleton_bound(std::uint64_t q, std::uint32_t rows, std::uint32_t cols, std::uint32_t d) {
    if (d < 1) fail(ErrorKind::InvalidParams, "d must be >= 1");
    const std::int64_t hi = std::max(rows, cols);
    const std::int64_t lo = std::min(rows, cols);
    return ceil_pow(q, hi * (lo - static_cast<std::int64_t>(d) + 1));
}

MrdCode::MrdCode(MrdParams params) : params_(params) {
    params_.validate();
    m_star_ = std::max(params_.k, params_.w);
    ell_ = std::min(params_.k, params_.w);
    kappa_ = (ell_ + 1 > params_.d) ? ell_ - params_.d + 1 : 0;

    if (trivial()) {
        size_ = 1;
        return;
    }
    size_ = bignat_pow(params_.q, std::uint64_t(m_star_) * kappa_);

    ext_ = ExtensionField::create(FieldSpec::for_size(params_.q), m_star_);
    eval_pows_.resize(kappa_);
    eval_pows_[0].reserve(ell_);
    for (std::uint32_t i = 0; i < ell_; ++i) eval_pows_[0].push_back(ext_->monomial(i));
    for (std::uint32_t t = 1; t < kappa_; ++t) {
        eval_pows_[t].reserve(ell_);
        for (std::uint32_t i = 0; i < ell_; ++i) eval_pows_[t].push_back(ext_->frobenius_q(eval_pows_[t - 1][i], 1));
    }
}

MrdCode build_mrd(const MrdParams& params) { return MrdCode(params); }

MatrixGFq MrdCode::encode(const std::vector<ExtensionField::Elem>& message) const {
    if (kappa_ == 0 || params_.w == 0) fail(ErrorKind::TrivialCode, "trivial code has no message space");
    if (message.size() != kappa_) fail(ErrorKind::LengthMismatch, "message must have msg_dim coefficients");

    MatrixGFq word(params_.k, params_.w, params_.q);
    for (std::uint32_t i = 0; i < ell_; ++i) {
        ExtensionField::Elem symbol = ext_->zero();
        for (std::uint32_t t = 0; t < kappa_; ++t)
            symbol = ext_->add(symbol, ext_->mul(message[t], eval_pows_[t][i]));
        // symbol coefficients are the GF(q) coordinates of row/column i
        if (rows_orientation()) {
            for (std::uint32_t j = 0; j < m_star_; ++j) word.set(i, j, static_cast<std::uint16_t>(symbol[j]));
        } else {
            for (std::uint32_t j = 0; j < m_star_; ++j) word.set(j, i, static_cast<std::uint16_t>(symbol[j]));
        }
    }
    return word;
}

MatrixGFq MrdCode::codeword_at(std::uint64_t index) const {
    if (trivial()) {
        if (index != 0) fail(ErrorKind::BadInput, "trivial code has a single word");
        return MatrixGFq(params_.k, params_.w, params_.q);
    }
    std::vector<ExtensionField::Elem> message;
    message.reserve(kappa_);
    BigNat rem(index);
    const BigNat radix = bignat_pow(params_.q, m_star_);
    for (std::uint32_t t = 0; t < kappa_; ++t) {
        const BigNat digit = rem % radix;
        message.push_back(ext_->from_index(digit.convert_to<std::uint64_t>()));
        rem /= radix;
    }
    if (rem != 0) fail(ErrorKind::BadInput, "message index out of range");
    return encode(message);
}

std::vector<MatrixGFq> enumerate_mrd(const MrdCode& code, const BigNat& cap) {
    if (code.size() > cap) fail(ErrorKind::CapExceeded, "code size exceeds the enumeration cap");
    if (code.size() > (BigNat(1) << 62)) fail(ErrorKind::CapExceeded, "code too large to enumerate");
    const std::uint64_t n = code.size().convert_to<std::uint64_t>();
    std::vector<MatrixGFq> words;
    words.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) words.push_back(code.codeword_at(i));
    return words;
}

std::uint32_t min_rank_distance(const MrdCode& code, const BigNat& cap) {
    if (code.size() < 2) fail(ErrorKind::TrivialCode, "minimum distance needs at least two codewords");
    const auto words = enumerate_mrd(code, cap);
    return kernels::min_nonzero_rank(words);
}

std::uint32_t min_rank_distance_pairwise(const MrdCode& code, const BigNat& cap) {
    if (code.size() < 2) fail(ErrorKind::TrivialCode, "minimum distance needs at least two codewords");
    const auto words = enumerate_mrd(code, cap);
    return kernels::min_pairwise_rank_distance(words);
}

}  // namespace lmrd
