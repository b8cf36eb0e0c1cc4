#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lmrd/bignat.hpp"
#include "lmrd/galois.hpp"

namespace lmrd {

class ExtensionField;
using ExtFieldPtr = std::shared_ptr<const ExtensionField>;

/// GF(q^deg) built directly on top of the canonical GF(q): elements are
/// length-deg coefficient vectors over GF(q) modulo the lexicographically
/// smallest monic irreducible polynomial of degree deg over GF(q). Keeping
/// the tower explicit makes the GF(q)-coordinate expansion of an element a
/// plain read of its coefficients, which is what turns code symbols into
/// matrix rows/columns. Unlike FieldSpec there is no size guard: the degree
/// can be in the hundreds, elements are never tabulated.
class ExtensionField {
  public:
    /// Element: length-deg vector of GF(q) digits, constant coordinate first.
    using Elem = std::vector<std::uint64_t>;

    /// Canonical (cached) extension of the given degree over GF(q).
    static ExtFieldPtr create(FieldPtr base, std::uint32_t deg);

    const FieldPtr& base() const noexcept { return base_; }
    std::uint32_t deg() const noexcept { return deg_; }
    std::uint64_t base_q() const noexcept { return base_->q(); }
    /// Modulus over GF(q), constant term first, length deg+1, monic.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    Elem zero() const { return Elem(deg_, 0); }
    Elem one() const;
    /// The basis monomial alpha^i (requires i < deg).
    Elem monomial(std::uint32_t i) const;
    /// Element with index idx in [0, q^deg): base-q digits as coefficients.
    Elem from_index(std::uint64_t idx) const;

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, const BigNat& e) const;
    /// a^{q^t}, the GF(q)-linear Frobenius iterate.
    Elem frobenius_q(const Elem& a, std::uint32_t t) const;

    ExtensionField(const ExtensionField&) = delete;
    ExtensionField& operator=(const ExtensionField&) = delete;

  private:
    ExtensionField(FieldPtr base, std::uint32_t deg);

    FieldPtr base_;
    std::uint32_t deg_ = 0;
    std::vector<std::uint64_t> modulus_;
};

}  // namespace lmrd
