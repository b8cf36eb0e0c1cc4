#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmrd/construct.hpp"

namespace lmrd {

/// Size of the single lifted MRD code: q^{(n-k)(k-d+1)}.
BigNat lifted_mrd_size(const CodeParams& params);

/// Lower bound on A_q(n, d, k): the multi-component cardinality, evaluated
/// as the sum of the per-component Singleton-bound sizes. This is a second,
/// independent route to the same number as size_formula; the tests assert
/// they agree.
BigNat lower_bound_aq(const CodeParams& params);

struct BoundRow {
    CodeParams params;
    BigNat lifted_size;
    BigNat multi_size;
    std::string ratio;  // multi/lifted, exact rational rendered to 4 places
};

enum class DRule {
    All,     // every 1 <= d <= k
    EqualK,  // d = k only
};

/// multi/lifted rendered with 4 decimal places (round half up), computed in
/// exact integer arithmetic.
std::string render_ratio(const BigNat& multi, const BigNat& lifted);

/// Rows over the grid {q in q_list} x {n = 2..n_max} x {k = 1..k_max} x
/// {d per d_rule}, lexicographic in (q, n, k, d); cells violating the
/// parameter invariants are skipped.
std::vector<BoundRow> bound_table(const std::vector<std::uint64_t>& q_list, std::uint32_t n_max,
                                  std::uint32_t k_max, DRule d_rule);

std::string render_csv(const std::vector<BoundRow>& rows);
std::string render_markdown(const std::vector<BoundRow>& rows);

}  // namespace lmrd
