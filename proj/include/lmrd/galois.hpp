#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lmrd/bignat.hpp"
#include "lmrd/errors.hpp"

namespace lmrd {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Immutable description of GF(p^m) together with exact digit arithmetic.
///
/// Elements are encoded as "digits": integers in [0, q) whose base-p
/// expansion lists the coordinates over the polynomial basis 1, a, ..., a^{m-1}
/// (constant coordinate least significant). The modulus is the
/// lexicographically smallest monic irreducible polynomial of degree m over
/// GF(p), coefficients compared low-degree-first as base-p digits, so the
/// same (p, m) always yields the same field.
class FieldSpec {
  public:
    /// Enumeration guard: fields larger than this are refused by create().
    static constexpr std::uint64_t kEnumerationGuard = std::uint64_t(1) << 20;

    /// Canonical (cached) field GF(p^m). Throws NotPrime / DegreeTooLarge.
    static FieldPtr create(std::uint64_t p, std::uint32_t m);

    /// Canonical field of size q = p^m; factors q. Throws InvalidParams if q
    /// is not a prime power, DegreeTooLarge past the guard.
    static FieldPtr for_size(std::uint64_t q);

    std::uint64_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint64_t q() const noexcept { return q_; }

    /// Modulus coefficients, constant term first, length m+1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool same_as(const FieldSpec& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    // Digit arithmetic. All inputs must be < q.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws DivisionByZero on 0
    std::uint64_t pow(std::uint64_t a, const BigNat& e) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// a^{base_q^t}. base_q must be p^s with s | m (throws InvalidBase).
    std::uint64_t frobenius(std::uint64_t a, std::uint64_t base_q, std::uint32_t t) const;

    /// Coordinates over the polynomial basis: length-m vector of GF(p) digits.
    std::vector<std::uint32_t> expand(std::uint64_t a) const;
    /// Inverse of expand.
    std::uint64_t compose(const std::vector<std::uint32_t>& coeffs) const;

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

  private:
    FieldSpec(std::uint64_t p, std::uint32_t m);
    void build_tables();

    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const;

    std::uint64_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;

    // Full lookup tables for small fields; empty above kLutLimit.
    static constexpr std::uint64_t kLutLimit = 512;
    std::vector<std::uint16_t> add_lut_;
    std::vector<std::uint16_t> mul_lut_;
    std::vector<std::uint16_t> inv_lut_;
    std::vector<std::uint16_t> neg_lut_;
};

/// One element of a FieldSpec. Value type; mixing elements from different
/// fields is a SpecMismatch error.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr spec, std::uint64_t digit) : spec_(std::move(spec)), digit_(digit) {
        if (!spec_) fail(ErrorKind::BadInput, "FieldElement requires a field");
        if (digit_ >= spec_->q()) fail(ErrorKind::BadInput, "element digit out of range");
    }
    FieldElement(FieldPtr spec, const std::vector<std::uint32_t>& coeffs)
        : FieldElement(spec, spec ? spec->compose(coeffs) : 0) {}

    const FieldPtr& spec() const noexcept { return spec_; }
    std::uint64_t digit() const noexcept { return digit_; }
    std::vector<std::uint32_t> coeffs() const { return spec_->expand(digit_); }
    bool is_zero() const noexcept { return digit_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.digit_ == b.digit_ && a.spec_ && b.spec_ && a.spec_->same_as(*b.spec_);
    }

  private:
    FieldPtr spec_;
    std::uint64_t digit_ = 0;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
FieldElement frobenius(const FieldElement& a, std::uint64_t base_q, std::uint32_t t);
std::vector<std::uint32_t> expand(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }

bool is_prime(std::uint64_t n);

}  // namespace lmrd
