#pragma once

#include <cstdint>
#include <vector>

#include "lmrd/bignat.hpp"

namespace lmrd::poly {

// Dense univariate polynomials over an abstract coefficient field, used for
// modulus selection. Coefficients are field digits, constant term first, no
// trailing zeros (the zero polynomial is the empty vector).
//
// The Ops parameter supplies digit arithmetic:
//   uint64_t add(a, b), sub(a, b), mul(a, b), inv(a)
// with 0 and 1 the additive/multiplicative identities.

using Digits = std::vector<std::uint64_t>;

inline void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Digits& a) { return static_cast<int>(a.size()) - 1; }

template <class Ops>
Digits poly_mul(const Ops& f, const Digits& a, const Digits& b) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

// Remainder of a modulo monic m.
template <class Ops>
Digits poly_mod(const Ops& f, Digits a, const Digits& m) {
    const int dm = degree(m);
    trim(a);
    while (degree(a) >= dm) {
        const std::uint64_t lead = a.back();
        const int shift = degree(a) - dm;
        if (lead != 0) {
            for (int i = 0; i <= dm; ++i) {
                const std::uint64_t t = f.mul(lead, m[static_cast<std::size_t>(i)]);
                a[static_cast<std::size_t>(i + shift)] = f.sub(a[static_cast<std::size_t>(i + shift)], t);
            }
        }
        trim(a);
    }
    return a;
}

template <class Ops>
Digits poly_powmod(const Ops& f, Digits base, const BigNat& e, const Digits& m) {
    Digits result{1};
    base = poly_mod(f, std::move(base), m);
    const std::size_t bits = (e == 0) ? 0 : boost::multiprecision::msb(e) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_mod(f, poly_mul(f, result, result), m);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
            result = poly_mod(f, poly_mul(f, result, base), m);
    }
    return result;
}

template <class Ops>
Digits poly_gcd(const Ops& f, Digits a, Digits b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // reduce a mod b after making b monic
        const std::uint64_t lead_inv = f.inv(b.back());
        Digits bm = b;
        for (auto& c : bm) c = f.mul(c, lead_inv);
        a = poly_mod(f, std::move(a), bm);
        std::swap(a, b);
    }
    return a;
}

template <class Ops>
Digits poly_sub(const Ops& f, Digits a, const Digits& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
}

/// Rabin test: m (monic, degree >= 1) is irreducible over the coefficient
/// field of size field_size iff x^{Q^deg} == x mod m and, for every prime
/// divisor l of deg, gcd(x^{Q^{deg/l}} - x, m) is constant.
template <class Ops>
bool poly_irreducible(const Ops& f, const Digits& m, std::uint64_t field_size) {
    const int deg = degree(m);
    if (deg <= 0) return false;
    if (deg == 1) return true;

    const Digits x{0, 1};
    const BigNat Q(field_size);

    if (poly_powmod(f, x, bignat_pow(Q, static_cast<std::uint64_t>(deg)), m) != x) return false;

    std::uint32_t rest = static_cast<std::uint32_t>(deg);
    std::vector<std::uint32_t> prime_factors;
    for (std::uint32_t l = 2; l * l <= rest; ++l) {
        if (rest % l != 0) continue;
        prime_factors.push_back(l);
        while (rest % l == 0) rest /= l;
    }
    if (rest > 1) prime_factors.push_back(rest);

    for (std::uint32_t l : prime_factors) {
        const std::uint32_t sub_deg = static_cast<std::uint32_t>(deg) / l;
        Digits h = poly_powmod(f, x, bignat_pow(Q, sub_deg), m);
        h = poly_sub(f, std::move(h), x);
        if (degree(poly_gcd(f, std::move(h), m)) > 0) return false;
    }
    return true;
}

}  // namespace lmrd::poly
