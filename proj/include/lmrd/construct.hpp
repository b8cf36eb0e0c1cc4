#pragma once

#include <cstdint>
#include <vector>

#include "lmrd/bignat.hpp"
#include "lmrd/linalg.hpp"
#include "lmrd/mrd.hpp"

namespace lmrd {

/// Parameters of a constant dimension code in G_q(k, n) with minimum
/// injection distance d. Requires 1 <= d <= k and n >= 2k.
struct CodeParams {
    std::uint64_t q = 2;
    std::uint32_t n = 2;
    std::uint32_t k = 1;
    std::uint32_t d = 1;

    void validate() const;
};

/// Row space of [I_k | A]; the block matrix is already a canonical RREF.
Subspace lift(const MatrixGFq& a);

/// Row space of [0_{k x shift} | I_k | A]; pivots sit in columns
/// shift .. shift+k-1.
Subspace shifted_lift(const MatrixGFq& a, std::uint32_t shift);

struct LiftedCode {
    std::vector<Subspace> words;
    BigNat declared_size;
};

/// Lift every codeword of an MRD code with k rows and n-k columns into
/// G_q(k, n). Requires the code size <= cap.
LiftedCode lift_code(const MrdCode& mrd, std::uint32_t n, const BigNat& cap);

/// Number of components: floor((n-k)/d) + 1.
std::uint32_t component_count(const CodeParams& params);

/// One component: the width-(n-k-jd) MRD code lifted behind j*d zero
/// columns. The MRD code itself is materialized on demand (it is a pure
/// function of the parameters), so building the union never constructs
/// extension fields that are only needed for enumeration.
struct ComponentCode {
    std::uint32_t j = 0;
    std::uint32_t shift = 0;  // j*d zero columns
    std::uint32_t width = 0;  // n-k-jd
    BigNat size;

    MrdParams mrd_params() const { return MrdParams{q, k, width, d}; }
    MrdCode make_mrd() const { return build_mrd(mrd_params()); }

    std::uint64_t q = 2;
    std::uint32_t k = 1;
    std::uint32_t d = 1;
};

/// The union of all shifted lifted MRD components, with its exact size.
class MultiComponentCode {
  public:
    explicit MultiComponentCode(CodeParams params);

    const CodeParams& params() const noexcept { return params_; }
    const std::vector<ComponentCode>& components() const noexcept { return components_; }
    const BigNat& size() const noexcept { return size_; }

  private:
    CodeParams params_;
    std::vector<ComponentCode> components_;
    BigNat size_;
};

MultiComponentCode build_multi(const CodeParams& params);

/// Exact cardinality: sum of q^{(k-d+1)(n-k-di)} over i = 0..floor((n-2k)/d)
/// plus sum of ceil(q^{k(n-k+1-d(i+1))}) up to floor((n-k)/d).
BigNat size_formula(const CodeParams& params);

/// Closed form for k = d with r = n mod k: (q^n - q^{r+k})/(q^k - 1) + 1.
BigNat size_closed_form_kd(std::uint64_t q, std::uint32_t n, std::uint32_t k);

/// All N subspaces, components in index order, message order within each
/// component. Requires N <= cap.
std::vector<Subspace> enumerate_multi(const MultiComponentCode& code, const BigNat& cap);

struct VerifyReport {
    BigNat cardinality;        // distinct canonical subspaces
    std::uint32_t min_distance = 0;
    bool components_disjoint = false;
};

/// Recounts the union via canonical forms, measures the minimum injection
/// distance by brute force and checks the pivot structure of every word.
VerifyReport verify_multi(const MultiComponentCode& code, const BigNat& cap);

}  // namespace lmrd
