#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "lmrd/bounds.hpp"
#include "lmrd/construct.hpp"
#include "lmrd/io_json.hpp"
#include "lmrd/mrd.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCapExceeded = 3;

constexpr std::uint64_t kDefaultCap = 5000;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) lmrd::fail(lmrd::ErrorKind::BadInput, "cannot open output file " + path);
    out << text;
}

int cmd_build(std::uint64_t q, std::uint32_t n, std::uint32_t k, std::uint32_t d, const std::string& out_path,
              std::uint64_t cap) {
    const lmrd::MultiComponentCode code = lmrd::build_multi({q, n, k, d});
    if (!out_path.empty()) {
        // codeword export enumerates, so the cap applies
        write_output(out_path, lmrd::export_multi_text(code, true, lmrd::BigNat(cap)));
    }
    std::cout << "N=" << lmrd::to_decimal(code.size()) << "\n";
    return kExitOk;
}

int cmd_size(std::uint64_t q, std::uint32_t n, std::uint32_t k, std::uint32_t d) {
    const lmrd::CodeParams params{q, n, k, d};
    const lmrd::BigNat n_general = lmrd::size_formula(params);
    std::cout << "N=" << lmrd::to_decimal(n_general);
    if (k == d) {
        const lmrd::BigNat n_closed = lmrd::size_closed_form_kd(q, n, k);
        if (n_closed != n_general) lmrd::fail(lmrd::ErrorKind::BadInput, "closed form disagrees with the general formula");
        std::cout << " closed_form=" << lmrd::to_decimal(n_closed);
    }
    std::cout << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& in_path, std::uint64_t cap) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) lmrd::fail(lmrd::ErrorKind::BadInput, "cannot open input file " + in_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        lmrd::fail(lmrd::ErrorKind::BadInput, std::string("malformed JSON: ") + e.what());
    }
    const lmrd::FileCheck check = lmrd::verify_export(doc, lmrd::BigNat(cap));
    std::cout << "cardinality=" << (check.cardinality_ok ? "OK" : "FAIL")
              << " min_distance=" << (check.min_distance_ok ? "OK" : "FAIL")
              << " components=" << (check.components_ok ? "OK" : "FAIL") << "\n";
    return check.all_ok() ? kExitOk : kExitVerifyFail;
}

int cmd_mrd(std::uint64_t q, std::uint32_t rows, std::uint32_t cols, std::uint32_t d, bool verify,
            std::uint64_t cap) {
    const lmrd::BigNat bound = lmrd::singleton_bound(q, rows, cols, d);
    std::cout << "bound=" << lmrd::to_decimal(bound);
    if (verify) {
        const lmrd::MrdCode code = lmrd::build_mrd({q, rows, cols, d});
        if (code.size() != bound) lmrd::fail(lmrd::ErrorKind::BadInput, "constructed size misses the bound");
        if (code.size() < 2) {
            std::cout << " min_rank_distance=n/a (trivial)";
        } else {
            std::cout << " min_rank_distance=" << lmrd::min_rank_distance(code, lmrd::BigNat(cap));
        }
    }
    std::cout << "\n";
    return kExitOk;
}

int cmd_table(const std::vector<std::uint64_t>& q_list, std::uint32_t n_max, std::uint32_t k_max,
              const std::string& format, const std::string& d_rule, const std::string& out_path) {
    if (q_list.empty()) lmrd::fail(lmrd::ErrorKind::InvalidParams, "need at least one field size");
    for (std::uint64_t q : q_list) lmrd::FieldSpec::for_size(q);  // reject non prime powers up front
    const lmrd::DRule rule = (d_rule == "k") ? lmrd::DRule::EqualK : lmrd::DRule::All;
    const auto rows = lmrd::bound_table(q_list, n_max, k_max, rule);
    write_output(out_path, format == "md" ? lmrd::render_markdown(rows) : lmrd::render_csv(rows));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-component lifted MRD subspace codes"};
    app.require_subcommand(1);

    std::uint64_t q = 2;
    std::uint32_t n = 6, k = 2, d = 2, rows = 2, cols = 2;
    std::uint64_t cap = kDefaultCap;
    std::string out_path, in_path, format = "csv", d_rule = "all";
    std::uint32_t n_max = 8, k_max = 3;
    std::vector<std::uint64_t> q_list;
    bool verify_flag = false;

    auto* build = app.add_subcommand("build", "construct a code and print its exact cardinality");
    build->add_option("--q", q, "field size (prime power)")->required();
    build->add_option("--n", n, "ambient dimension")->required();
    build->add_option("--k", k, "codeword dimension")->required();
    build->add_option("--d", d, "minimum injection distance")->required();
    build->add_option("--out", out_path, "write the JSON export (includes codewords)");
    build->add_option("--cap", cap, "codeword enumeration cap");

    auto* size = app.add_subcommand("size", "evaluate the cardinality formula only");
    size->add_option("--q", q)->required();
    size->add_option("--n", n)->required();
    size->add_option("--k", k)->required();
    size->add_option("--d", d)->required();

    auto* verify = app.add_subcommand("verify", "re-check an exported code against its header");
    verify->add_option("--in", in_path, "JSON export to verify")->required();
    verify->add_option("--cap", cap, "codeword verification cap");

    auto* mrd = app.add_subcommand("mrd", "rank-metric bound and optional brute-force check");
    mrd->add_option("--q", q)->required();
    mrd->add_option("--rows", rows)->required();
    mrd->add_option("--cols", cols)->required();
    mrd->add_option("--d", d)->required();
    mrd->add_flag("--verify", verify_flag, "enumerate and measure the minimum rank distance");
    mrd->add_option("--cap", cap, "enumeration cap");

    auto* table = app.add_subcommand("table", "tabulate the lower bound over a parameter grid");
    table->add_option("--q", q_list, "field sizes, comma separated")->required()->delimiter(',');
    table->add_option("--n-max", n_max, "largest ambient dimension")->required();
    table->add_option("--k-max", k_max, "largest codeword dimension")->required();
    table->add_option("--format", format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
    table->add_option("--d-rule", d_rule, "all or k")->check(CLI::IsMember({"all", "k"}));
    table->add_option("--out", out_path, "write the table to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (build->parsed()) return cmd_build(q, n, k, d, out_path, cap);
        if (size->parsed()) return cmd_size(q, n, k, d);
        if (verify->parsed()) return cmd_verify(in_path, cap);
        if (mrd->parsed()) return cmd_mrd(q, rows, cols, d, verify_flag, cap);
        if (table->parsed()) return cmd_table(q_list, n_max, k_max, format, d_rule, out_path);
    } catch (const lmrd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == lmrd::ErrorKind::CapExceeded ? kExitCapExceeded : kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
