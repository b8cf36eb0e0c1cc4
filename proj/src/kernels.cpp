#include "lmrd/kernels.hpp"

#include <limits>

namespace lmrd::kernels {

namespace {

constexpr std::uint32_t kNoPair = std::numeric_limits<std::uint32_t>::max();

// Validate up front: a throw from inside an OpenMP region would terminate.
void require_uniform(std::span<const Subspace> words) {
    if (words.empty()) return;
    for (const Subspace& w : words) {
        if (w.ambient_dim() != words[0].ambient_dim() || w.q() != words[0].q())
            fail(ErrorKind::AmbientMismatch, "codewords live in different ambient spaces");
        if (w.dim() != words[0].dim())
            fail(ErrorKind::DimensionMismatch, "codewords have different dimensions");
    }
}

void require_uniform(std::span<const MatrixGFq> words) {
    if (words.empty()) return;
    for (const MatrixGFq& w : words)
        if (w.rows() != words[0].rows() || w.cols() != words[0].cols() || w.q() != words[0].q())
            fail(ErrorKind::ShapeMismatch, "codewords have different shapes");
}

}  // namespace

std::uint32_t min_pairwise_injection_distance_serial(std::span<const Subspace> words) {
    require_uniform(words);
    const std::size_t n = words.size();
    std::uint32_t best = kNoPair;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint32_t d = injection_distance(words[i], words[j]);
            if (d < best) best = d;
        }
    if (best == kNoPair) fail(ErrorKind::TooFewCodewords, "no pairs to compare");
    return best;
}

std::uint32_t min_pairwise_injection_distance(std::span<const Subspace> words) {
    require_uniform(words);
    const std::int64_t n = static_cast<std::int64_t>(words.size());
    std::uint32_t best = kNoPair;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (std::int64_t i = 0; i < n - 1; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            const std::uint32_t d = injection_distance(words[static_cast<std::size_t>(i)],
                                                       words[static_cast<std::size_t>(j)]);
            if (d < best) best = d;
        }
    if (best == kNoPair) fail(ErrorKind::TooFewCodewords, "no pairs to compare");
    return best;
}

std::uint32_t min_nonzero_rank_serial(std::span<const MatrixGFq> words) {
    require_uniform(words);
    std::uint32_t best = kNoPair;
    for (const MatrixGFq& w : words) {
        if (w.is_zero()) continue;
        const std::uint32_t r = rank(w);
        if (r < best) best = r;
    }
    if (best == kNoPair) fail(ErrorKind::TooFewCodewords, "no nonzero words");
    return best;
}

std::uint32_t min_nonzero_rank(std::span<const MatrixGFq> words) {
    require_uniform(words);
    const std::int64_t n = static_cast<std::int64_t>(words.size());
    std::uint32_t best = kNoPair;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t i = 0; i < n; ++i) {
        const MatrixGFq& w = words[static_cast<std::size_t>(i)];
        if (w.is_zero()) continue;
        const std::uint32_t r = rank(w);
        if (r < best) best = r;
    }
    if (best == kNoPair) fail(ErrorKind::TooFewCodewords, "no nonzero words");
    return best;
}

std::uint32_t min_pairwise_rank_distance_serial(std::span<const MatrixGFq> words) {
    require_uniform(words);
    const std::size_t n = words.size();
    std::uint32_t best = kNoPair;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint32_t d = rank_distance(words[i], words[j]);
            if (d < best) best = d;
        }
    if (best == kNoPair) fail(ErrorKind::TooFewCodewords, "no pairs to compare");
    return best;
}

std::uint32_t min_pairwise_rank_distance(std::span<const MatrixGFq> words) {
    require_uniform(words);
    const std::int64_t n = static_cast<std::int64_t>(words.size());
    std::uint32_t best = kNoPair;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (std::int64_t i = 0; i < n - 1; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            const std::uint32_t d = rank_distance(words[static_cast<std::size_t>(i)],
                                                  words[static_cast<std::size_t>(j)]);
            if (d < best) best = d;
        }
    if (best == kNoPair) fail(ErrorKind::TooFewCodewords, "no pairs to compare");
    return best;
}

}  // namespace lmrd::kernels
