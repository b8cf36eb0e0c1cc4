#pragma once

#include <cstdint>
#include <span>

#include "lmrd/linalg.hpp"

namespace lmrd::kernels {

// Brute-force verification loops. Each kernel exists twice: a plain serial
// reference and an OpenMP variant. Both compute exact minima, so the results
// are identical regardless of scheduling; the serial versions are kept as the
// ground truth the tests compare against, and tools/lmrd_bench times one
// against the other.

/// min over unordered pairs of injection_distance(words[i], words[j]).
std::uint32_t min_pairwise_injection_distance_serial(std::span<const Subspace> words);
std::uint32_t min_pairwise_injection_distance(std::span<const Subspace> words);

/// min rank over words that are not the zero matrix (minimum weight of a
/// linear rank-metric code).
std::uint32_t min_nonzero_rank_serial(std::span<const MatrixGFq> words);
std::uint32_t min_nonzero_rank(std::span<const MatrixGFq> words);

/// min over unordered pairs of rank_distance(words[i], words[j]).
std::uint32_t min_pairwise_rank_distance_serial(std::span<const MatrixGFq> words);
std::uint32_t min_pairwise_rank_distance(std::span<const MatrixGFq> words);

}  // namespace lmrd::kernels
