#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "lmrd/errors.hpp"

namespace lmrd {

/// Unbounded nonnegative integer. Cardinalities like q^{(k-d+1)(n-k)} overflow
/// machine words already at desk-scale parameters, so every size, bound and
/// cap in the library is a BigNat.
using BigNat = boost::multiprecision::cpp_int;

/// base^exp as an exact integer.
inline BigNat bignat_pow(const BigNat& base, std::uint64_t exp) {
    BigNat r = 1;
    BigNat b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline BigNat bignat_pow(std::uint64_t base, std::uint64_t exp) { return bignat_pow(BigNat(base), exp); }

/// ceil(q^e) for integer e: exact power when e >= 0, else 1 (0 < q^e < 1).
inline BigNat ceil_pow(std::uint64_t q, std::int64_t e) {
    if (e <= 0) return 1;
    return bignat_pow(q, static_cast<std::uint64_t>(e));
}

inline std::string to_decimal(const BigNat& x) { return x.str(); }

inline BigNat parse_decimal(const std::string& s) {
    if (s.empty()) fail(ErrorKind::BadInput, "empty decimal string");
    for (char c : s)
        if (c < '0' || c > '9') fail(ErrorKind::BadInput, "not a nonnegative decimal string: " + s);
    return BigNat(s);
}

/// Quotient of an exact division; the caller promises divisibility.
inline BigNat div_exact(const BigNat& num, const BigNat& den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "division by zero");
    BigNat q = num / den;
    if (q * den != num) fail(ErrorKind::BadInput, "division is not exact");
    return q;
}

}  // namespace lmrd
