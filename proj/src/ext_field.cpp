#include "lmrd/ext_field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "lmrd/poly.hpp"

namespace lmrd {

namespace {

struct BaseOps {
    const FieldSpec* f;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return f->add(a, b); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return f->sub(a, b); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return f->mul(a, b); }
    std::uint64_t inv(std::uint64_t a) const { return f->inv(a); }
};

std::mutex g_ext_mutex;
std::map<std::pair<std::uint64_t, std::uint32_t>, ExtFieldPtr> g_ext_registry;

}  // namespace

ExtensionField::ExtensionField(FieldPtr base, std::uint32_t deg) : base_(std::move(base)), deg_(deg) {
    const BaseOps ops{base_.get()};
    const std::uint64_t q = base_->q();
    for (std::uint64_t v = 0;; ++v) {
        poly::Digits cand(deg_ + 1, 0);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < deg_; ++i) {
            cand[i] = t % q;
            t /= q;
        }
        if (t != 0) fail(ErrorKind::BadInput, "no irreducible modulus found");  // unreachable
        cand[deg_] = 1;
        if (poly::poly_irreducible(ops, cand, q)) {
            modulus_ = std::move(cand);
            break;
        }
    }
}

ExtFieldPtr ExtensionField::create(FieldPtr base, std::uint32_t deg) {
    if (!base) fail(ErrorKind::BadInput, "extension requires a base field");
    if (deg < 1) fail(ErrorKind::InvalidParams, "extension degree must be >= 1");
    std::lock_guard<std::mutex> lock(g_ext_mutex);
    auto key = std::make_pair(base->q(), deg);
    auto it = g_ext_registry.find(key);
    if (it != g_ext_registry.end()) return it->second;
    ExtFieldPtr ext(new ExtensionField(std::move(base), deg));
    g_ext_registry.emplace(key, ext);
    return ext;
}

ExtensionField::Elem ExtensionField::one() const {
    Elem e(deg_, 0);
    e[0] = 1;
    return e;
}

ExtensionField::Elem ExtensionField::monomial(std::uint32_t i) const {
    if (i >= deg_) fail(ErrorKind::BadInput, "monomial degree out of range");
    Elem e(deg_, 0);
    e[i] = 1;
    return e;
}

ExtensionField::Elem ExtensionField::from_index(std::uint64_t idx) const {
    Elem e(deg_, 0);
    const std::uint64_t q = base_q();
    for (std::uint32_t i = 0; i < deg_ && idx != 0; ++i) {
        e[i] = idx % q;
        idx /= q;
    }
    if (idx != 0) fail(ErrorKind::BadInput, "element index out of range");
    return e;
}

bool ExtensionField::is_zero(const Elem& a) const {
    for (std::uint64_t c : a)
        if (c != 0) return false;
    return true;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) r[i] = base_->add(a[i], b[i]);
    return r;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) r[i] = base_->sub(a[i], b[i]);
    return r;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t> prod(2 * std::size_t(deg_) - 1, 0);
    for (std::uint32_t i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < deg_; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] = base_->add(prod[i + j], base_->mul(a[i], b[j]));
        }
    }
    // reduce by the monic modulus
    for (std::uint32_t i = 2 * deg_ - 2; i >= deg_ && i < prod.size(); --i) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < deg_; ++j)
            prod[i - deg_ + j] = base_->sub(prod[i - deg_ + j], base_->mul(c, modulus_[j]));
    }
    prod.resize(deg_);
    return prod;
}

ExtensionField::Elem ExtensionField::pow(Elem a, const BigNat& e) const {
    if (e == 0) return one();
    Elem r = one();
    const std::size_t bits = boost::multiprecision::msb(e) + 1;
    for (std::size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = mul(r, a);
    }
    return r;
}

ExtensionField::Elem ExtensionField::frobenius_q(const Elem& a, std::uint32_t t) const {
    // x^{q^deg} = x, so only t mod deg rounds matter
    Elem r = a;
    const BigNat q(base_q());
    for (std::uint32_t i = 0; i < t % deg_; ++i) r = pow(r, q);
    return r;
}

}  // namespace lmrd
