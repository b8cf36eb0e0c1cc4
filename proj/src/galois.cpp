#include "lmrd/galois.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "lmrd/poly.hpp"

namespace lmrd {

namespace {

// Digit arithmetic mod a prime, for modulus selection before the field exists.
struct ModPOps {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t inv(std::uint64_t a) const {
        // a^{p-2}; p is prime and a != 0
        std::uint64_t r = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

std::mutex g_registry_mutex;
std::map<std::pair<std::uint64_t, std::uint32_t>, FieldPtr> g_registry;

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint64_t p, std::uint32_t m) : p_(p), m_(m) {
    q_ = 1;
    for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;

    // Lexicographically smallest monic irreducible modulus: scan the
    // non-leading coefficients as a base-p counter, constant term least
    // significant.
    const ModPOps ops{p_};
    for (std::uint64_t v = 0;; ++v) {
        poly::Digits cand(m_ + 1, 0);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < m_; ++i) {
            cand[i] = t % p_;
            t /= p_;
        }
        if (t != 0) fail(ErrorKind::BadInput, "no irreducible modulus found");  // unreachable
        cand[m_] = 1;
        if (poly::poly_irreducible(ops, cand, p_)) {
            modulus_.assign(cand.begin(), cand.end());
            break;
        }
    }
    build_tables();
}

FieldPtr FieldSpec::create(std::uint64_t p, std::uint32_t m) {
    if (p < 2 || !is_prime(p)) fail(ErrorKind::NotPrime, "p must be prime, got " + std::to_string(p));
    if (m < 1) fail(ErrorKind::InvalidParams, "extension degree must be >= 1");

    // overflow-safe p^m against the guard
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q > kEnumerationGuard / p)
            fail(ErrorKind::DegreeTooLarge, "field size p^m exceeds the enumeration guard 2^20");
        q *= p;
    }
    if (q > kEnumerationGuard) fail(ErrorKind::DegreeTooLarge, "field size p^m exceeds the enumeration guard 2^20");

    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto key = std::make_pair(p, m);
    auto it = g_registry.find(key);
    if (it != g_registry.end()) return it->second;
    FieldPtr spec(new FieldSpec(p, m));
    g_registry.emplace(key, spec);
    return spec;
}

FieldPtr FieldSpec::for_size(std::uint64_t q) {
    if (q < 2) fail(ErrorKind::InvalidParams, "field size must be >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t m = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) fail(ErrorKind::InvalidParams, "field size " + std::to_string(q) + " is not a prime power");
    return create(p, m);
}

void FieldSpec::build_tables() {
    if (q_ > kLutLimit) return;
    const auto n = static_cast<std::size_t>(q_);
    add_lut_.resize(n * n);
    mul_lut_.resize(n * n);
    neg_lut_.resize(n);
    inv_lut_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            // digitwise base-p addition, no carries
            std::uint64_t s = 0, pw = 1, x = a, y = b;
            for (std::uint32_t i = 0; i < m_; ++i) {
                s += ((x % p_ + y % p_) % p_) * pw;
                x /= p_;
                y /= p_;
                pw *= p_;
            }
            add_lut_[a * n + b] = static_cast<std::uint16_t>(s);
            mul_lut_[a * n + b] = static_cast<std::uint16_t>(mul_generic(a, b));
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        std::uint64_t s = 0, pw = 1, x = a;
        for (std::uint32_t i = 0; i < m_; ++i) {
            s += ((p_ - x % p_) % p_) * pw;
            x /= p_;
            pw *= p_;
        }
        neg_lut_[a] = static_cast<std::uint16_t>(s);
    }
    for (std::size_t a = 1; a < n; ++a) {
        for (std::size_t b = 1; b < n; ++b) {
            if (mul_lut_[a * n + b] == 1) {
                inv_lut_[a] = static_cast<std::uint16_t>(b);
                break;
            }
        }
    }
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
    if (!add_lut_.empty()) return add_lut_[a * q_ + b];
    if (m_ == 1) return (a + b) % p_;
    std::uint64_t s = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        s += ((a % p_ + b % p_) % p_) * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return s;
}

std::uint64_t FieldSpec::neg(std::uint64_t a) const {
    if (!neg_lut_.empty()) return neg_lut_[a];
    if (m_ == 1) return (p_ - a) % p_;
    std::uint64_t s = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        s += ((p_ - a % p_) % p_) * pw;
        a /= p_;
        pw *= p_;
    }
    return s;
}

std::uint64_t FieldSpec::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldSpec::mul_generic(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) return (a * b) % p_;
    // schoolbook product of the coefficient vectors, reduced by the modulus
    std::vector<std::uint64_t> av(m_), bv(m_), prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        av[i] = a % p_;
        a /= p_;
        bv[i] = b % p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (av[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p_;
    }
    for (std::uint32_t i = 2 * m_ - 2; i >= m_; --i) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < m_; ++j) {
            const std::uint64_t t = (c * modulus_[j]) % p_;
            const std::uint32_t idx = i - m_ + j;
            prod[idx] = (prod[idx] + p_ - t) % p_;
        }
    }
    std::uint64_t s = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        s += prod[i] * pw;
        pw *= p_;
    }
    return s;
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
    if (!mul_lut_.empty()) return mul_lut_[a * q_ + b];
    return mul_generic(a, b);
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldSpec::pow(std::uint64_t a, const BigNat& e) const {
    if (e == 0) return 1;
    std::uint64_t r = 1;
    const std::size_t bits = boost::multiprecision::msb(e) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = mul(r, a);
    }
    return r;
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (!inv_lut_.empty()) return inv_lut_[a];
    return pow(a, q_ - 2);
}

std::uint64_t FieldSpec::frobenius(std::uint64_t a, std::uint64_t base_q, std::uint32_t t) const {
    if (base_q < 2) fail(ErrorKind::InvalidBase, "frobenius base must be >= 2");
    std::uint32_t s = 0;
    std::uint64_t v = base_q;
    while (v % p_ == 0) {
        v /= p_;
        ++s;
    }
    if (v != 1 || s == 0 || m_ % s != 0)
        fail(ErrorKind::InvalidBase, std::to_string(base_q) + " is not a subfield size of this field");
    // x^{q^{m/s}} = x, so only t mod (m/s) rounds matter
    const std::uint32_t rounds = t % (m_ / s);
    std::uint64_t r = a;
    for (std::uint32_t i = 0; i < rounds; ++i) r = pow(r, base_q);
    return r;
}

std::vector<std::uint32_t> FieldSpec::expand(std::uint64_t a) const {
    std::vector<std::uint32_t> out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        out[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return out;
}

std::uint64_t FieldSpec::compose(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != m_) fail(ErrorKind::LengthMismatch, "coefficient vector must have length m");
    std::uint64_t s = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (coeffs[i] >= p_) fail(ErrorKind::BadInput, "coefficient out of range");
        s += coeffs[i] * pw;
        pw *= p_;
    }
    return s;
}

namespace {
const FieldSpec& common_spec(const FieldElement& a, const FieldElement& b) {
    if (!a.spec() || !b.spec()) fail(ErrorKind::SpecMismatch, "element without a field");
    if (!a.spec()->same_as(*b.spec())) fail(ErrorKind::SpecMismatch, "elements from different fields");
    return *a.spec();
}
}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
    const FieldSpec& f = common_spec(a, b);
    return {a.spec(), f.add(a.digit(), b.digit())};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    const FieldSpec& f = common_spec(a, b);
    return {a.spec(), f.mul(a.digit(), b.digit())};
}

FieldElement neg(const FieldElement& a) { return {a.spec(), a.spec()->neg(a.digit())}; }

FieldElement inv(const FieldElement& a) { return {a.spec(), a.spec()->inv(a.digit())}; }

FieldElement frobenius(const FieldElement& a, std::uint64_t base_q, std::uint32_t t) {
    return {a.spec(), a.spec()->frobenius(a.digit(), base_q, t)};
}

std::vector<std::uint32_t> expand(const FieldElement& a) { return a.spec()->expand(a.digit()); }

}  // namespace lmrd
