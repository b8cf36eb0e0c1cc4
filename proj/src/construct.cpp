#include "lmrd/construct.hpp"

#include <set>

#include "lmrd/kernels.hpp"

namespace lmrd {

void CodeParams::validate() const {
    if (q < 2) fail(ErrorKind::InvalidParams, "q must be >= 2");
    if (k < 1) fail(ErrorKind::InvalidParams, "k must be >= 1");
    if (d < 1 || d > k) fail(ErrorKind::InvalidParams, "need 1 <= d <= k");
    if (n < 2 * k) fail(ErrorKind::InvalidParams, "need n >= 2k");
}

Subspace lift(const MatrixGFq& a) { return shifted_lift(a, 0); }

Subspace shifted_lift(const MatrixGFq& a, std::uint32_t shift) {
    const std::uint32_t k = a.rows();
    const std::uint32_t n = shift + k + a.cols();
    MatrixGFq basis(k, n, a.q());
    for (std::uint32_t r = 0; r < k; ++r) {
        basis.set(r, shift + r, 1);
        for (std::uint32_t c = 0; c < a.cols(); ++c) basis.set(r, shift + k + c, a.at(r, c));
    }
    // [0 | I_k | A] is its own RREF: pivots are the identity columns
    return Subspace::from_canonical(std::move(basis));
}

LiftedCode lift_code(const MrdCode& mrd, std::uint32_t n, const BigNat& cap) {
    if (n < mrd.params().k || mrd.params().w != n - mrd.params().k)
        fail(ErrorKind::ShapeMismatch, "MRD code must have k rows and n-k columns");
    LiftedCode out;
    out.declared_size = mrd.size();
    for (const MatrixGFq& word : enumerate_mrd(mrd, cap)) out.words.push_back(lift(word));
    return out;
}

std::uint32_t component_count(const CodeParams& params) {
    params.validate();
    return (params.n - params.k) / params.d + 1;
}

MultiComponentCode::MultiComponentCode(CodeParams params) : params_(params) {
    params_.validate();
    const std::uint32_t count = component_count(params_);
    size_ = 0;
    for (std::uint32_t j = 0; j < count; ++j) {
        ComponentCode comp;
        comp.j = j;
        comp.shift = j * params_.d;
        comp.width = params_.n - params_.k - comp.shift;
        comp.q = params_.q;
        comp.k = params_.k;
        comp.d = params_.d;
        comp.size = singleton_bound(params_.q, params_.k, comp.width, params_.d);
        size_ += comp.size;
        components_.push_back(std::move(comp));
    }
    if (size_ != size_formula(params_)) fail(ErrorKind::BadInput, "component sizes disagree with the size formula");
}

MultiComponentCode build_multi(const CodeParams& params) { return MultiComponentCode(params); }

BigNat size_formula(const CodeParams& params) {
    params.validate();
    const std::int64_t n = params.n, k = params.k, d = params.d;
    const std::int64_t split = (n - 2 * k) / d;          // last index of the full-size terms
    const std::int64_t last = (n - k) / d;
    BigNat total = 0;
    for (std::int64_t i = 0; i <= split; ++i) total += ceil_pow(params.q, (k - d + 1) * (n - k - d * i));
    for (std::int64_t i = split + 1; i <= last; ++i) total += ceil_pow(params.q, k * (n - k + 1 - d * (i + 1)));
    return total;
}

BigNat size_closed_form_kd(std::uint64_t q, std::uint32_t n, std::uint32_t k) {
    CodeParams params{q, n, k, k};
    params.validate();
    const std::uint32_t r = n % k;
    const BigNat num = bignat_pow(q, n) - bignat_pow(q, r + k);
    const BigNat den = bignat_pow(q, k) - 1;
    return div_exact(num, den) + 1;
}

std::vector<Subspace> enumerate_multi(const MultiComponentCode& code, const BigNat& cap) {
    if (code.size() > cap) fail(ErrorKind::CapExceeded, "code size exceeds the enumeration cap");
    std::vector<Subspace> words;
    words.reserve(code.size().convert_to<std::uint64_t>());
    for (const ComponentCode& comp : code.components()) {
        const MrdCode mrd = comp.make_mrd();
        for (const MatrixGFq& word : enumerate_mrd(mrd, cap)) words.push_back(shifted_lift(word, comp.shift));
    }
    return words;
}

VerifyReport verify_multi(const MultiComponentCode& code, const BigNat& cap) {
    const auto words = enumerate_multi(code, cap);
    const CodeParams& p = code.params();

    VerifyReport report;
    std::set<Subspace> distinct(words.begin(), words.end());
    report.cardinality = BigNat(distinct.size());

    const std::uint64_t pair_cap =
        cap > (BigNat(1) << 62) ? (std::uint64_t(1) << 62) : cap.convert_to<std::uint64_t>();
    report.min_distance = min_injection_distance(words, pair_cap);

    // every word must carry the pivot block of exactly one component
    bool pivots_ok = true;
    std::size_t offset = 0;
    for (const ComponentCode& comp : code.components()) {
        const std::size_t count = comp.size.convert_to<std::size_t>();
        for (std::size_t i = 0; i < count && pivots_ok; ++i) {
            const auto pivots = words[offset + i].pivot_columns();
            if (pivots.size() != p.k) pivots_ok = false;
            for (std::uint32_t r = 0; r < pivots.size() && pivots_ok; ++r)
                if (pivots[r] != comp.shift + r) pivots_ok = false;
        }
        offset += count;
    }
    report.components_disjoint = pivots_ok && report.cardinality == code.size();
    return report;
}

}  // namespace lmrd
