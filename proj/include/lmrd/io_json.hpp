#pragma once

#include <json.hpp>
#include <string>

#include "lmrd/construct.hpp"

namespace lmrd {

/// Serialize a multi-component code: header fields q, n, k, d, N (decimal
/// string) and the component shapes; with_codewords additionally embeds the
/// RREF basis rows of every subspace in enumeration order (requires
/// N <= cap). The output is byte-identical across runs.
nlohmann::json export_multi(const MultiComponentCode& code, bool with_codewords, const BigNat& cap);

std::string export_multi_text(const MultiComponentCode& code, bool with_codewords, const BigNat& cap);

struct FileCheck {
    bool cardinality_ok = false;   // distinct canonical row spaces == declared N
    bool min_distance_ok = false;  // measured minimum injection distance == declared d
    bool components_ok = false;    // component table and pivot blocks consistent with the header

    bool all_ok() const { return cardinality_ok && min_distance_ok && components_ok; }
};

/// Re-check an exported document against its own header. The header is taken
/// as a set of claims, not re-validated as construction parameters, so a
/// corrupted field shows up as a failed check rather than a parse error.
/// Requires the codeword array to be present and no longer than cap.
FileCheck verify_export(const nlohmann::json& doc, const BigNat& cap);

}  // namespace lmrd
