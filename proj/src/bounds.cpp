#include "lmrd/bounds.hpp"

#include <sstream>

namespace lmrd {

BigNat lifted_mrd_size(const CodeParams& params) {
    params.validate();
    return bignat_pow(params.q,
                      std::uint64_t(params.n - params.k) * (params.k - params.d + 1));
}

BigNat lower_bound_aq(const CodeParams& params) {
    params.validate();
    BigNat total = 0;
    const std::uint32_t count = (params.n - params.k) / params.d + 1;
    for (std::uint32_t j = 0; j < count; ++j)
        total += singleton_bound(params.q, params.k, params.n - params.k - j * params.d, params.d);
    return total;
}

std::string render_ratio(const BigNat& multi, const BigNat& lifted) {
    if (lifted == 0) fail(ErrorKind::DivisionByZero, "ratio with zero denominator");
    const BigNat scaled = (multi * 20000 + lifted) / (2 * lifted);  // round half up at 4 places
    std::string frac = to_decimal(scaled % 10000);
    frac.insert(0, 4 - frac.size(), '0');
    return to_decimal(scaled / 10000) + "." + frac;
}

std::vector<BoundRow> bound_table(const std::vector<std::uint64_t>& q_list, std::uint32_t n_max,
                                  std::uint32_t k_max, DRule d_rule) {
    std::vector<BoundRow> rows;
    for (std::uint64_t q : q_list) {
        for (std::uint32_t n = 2; n <= n_max; ++n) {
            for (std::uint32_t k = 1; k <= k_max; ++k) {
                if (n < 2 * k) continue;
                const std::uint32_t d_lo = (d_rule == DRule::EqualK) ? k : 1;
                for (std::uint32_t d = d_lo; d <= k; ++d) {
                    const CodeParams params{q, n, k, d};
                    BoundRow row;
                    row.params = params;
                    row.lifted_size = lifted_mrd_size(params);
                    row.multi_size = size_formula(params);
                    row.ratio = render_ratio(row.multi_size, row.lifted_size);
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

std::string render_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "q,n,k,d,lifted_size,multi_size,ratio\n";
    for (const BoundRow& r : rows) {
        out << r.params.q << ',' << r.params.n << ',' << r.params.k << ',' << r.params.d << ','
            << to_decimal(r.lifted_size) << ',' << to_decimal(r.multi_size) << ',' << r.ratio << '\n';
    }
    return out.str();
}

std::string render_markdown(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "| q | n | k | d | lifted_size | multi_size | ratio |\n";
    out << "|---|---|---|---|-------------|------------|-------|\n";
    for (const BoundRow& r : rows) {
        out << "| " << r.params.q << " | " << r.params.n << " | " << r.params.k << " | " << r.params.d
            << " | " << to_decimal(r.lifted_size) << " | " << to_decimal(r.multi_size) << " | " << r.ratio
            << " |\n";
    }
    return out.str();
}

}  // namespace lmrd
