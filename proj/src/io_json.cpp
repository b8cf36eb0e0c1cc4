#include "lmrd/io_json.hpp"

#include <set>

#include "lmrd/kernels.hpp"

namespace lmrd {

nlohmann::json export_multi(const MultiComponentCode& code, bool with_codewords, const BigNat& cap) {
    const CodeParams& p = code.params();
    nlohmann::json doc;
    doc["q"] = p.q;
    doc["n"] = p.n;
    doc["k"] = p.k;
    doc["d"] = p.d;
    doc["N"] = to_decimal(code.size());
    doc["components"] = nlohmann::json::array();
    for (const ComponentCode& comp : code.components()) {
        doc["components"].push_back({{"j", comp.j}, {"width", comp.width}, {"size", to_decimal(comp.size)}});
    }
    if (with_codewords) {
        nlohmann::json words = nlohmann::json::array();
        for (const Subspace& s : enumerate_multi(code, cap)) {
            nlohmann::json basis = nlohmann::json::array();
            for (std::uint32_t r = 0; r < s.dim(); ++r) {
                nlohmann::json row = nlohmann::json::array();
                for (std::uint32_t c = 0; c < s.ambient_dim(); ++c) row.push_back(s.basis().at(r, c));
                basis.push_back(std::move(row));
            }
            words.push_back(std::move(basis));
        }
        doc["codewords"] = std::move(words);
    }
    return doc;
}

std::string export_multi_text(const MultiComponentCode& code, bool with_codewords, const BigNat& cap) {
    return export_multi(code, with_codewords, cap).dump(2) + "\n";
}

namespace {

struct ParsedHeader {
    std::uint64_t q = 0;
    std::uint32_t n = 0, k = 0, d = 0;
    BigNat declared_n;
};

ParsedHeader parse_header(const nlohmann::json& doc) {
    for (const char* key : {"q", "n", "k", "d", "N", "components"})
        if (!doc.contains(key)) fail(ErrorKind::BadInput, std::string("missing field '") + key + "'");
    ParsedHeader h;
    h.q = doc.at("q").get<std::uint64_t>();
    h.n = doc.at("n").get<std::uint32_t>();
    h.k = doc.at("k").get<std::uint32_t>();
    h.d = doc.at("d").get<std::uint32_t>();
    h.declared_n = parse_decimal(doc.at("N").get<std::string>());
    return h;
}

}  // namespace

FileCheck verify_export(const nlohmann::json& doc, const BigNat& cap) {
    const ParsedHeader h = parse_header(doc);
    if (!doc.contains("codewords")) fail(ErrorKind::BadInput, "document has no codewords to verify");
    const nlohmann::json& words_json = doc.at("codewords");
    if (!words_json.is_array()) fail(ErrorKind::BadInput, "codewords must be an array");
    if (BigNat(words_json.size()) > cap) fail(ErrorKind::CapExceeded, "codeword count exceeds the verification cap");

    // canonicalize every claimed basis through row_space
    std::vector<Subspace> words;
    bool rows_well_formed = true;
    words.reserve(words_json.size());
    for (const nlohmann::json& basis_json : words_json) {
        if (!basis_json.is_array() || basis_json.empty()) fail(ErrorKind::BadInput, "codeword must be a row array");
        const std::uint32_t rows = static_cast<std::uint32_t>(basis_json.size());
        std::vector<std::uint16_t> entries;
        entries.reserve(std::size_t(rows) * h.n);
        for (const nlohmann::json& row : basis_json) {
            if (!row.is_array() || row.size() != h.n) fail(ErrorKind::BadInput, "basis row has wrong length");
            for (const nlohmann::json& e : row) {
                const std::uint64_t v = e.get<std::uint64_t>();
                if (v >= h.q) fail(ErrorKind::BadInput, "basis entry out of range for GF(q)");
                entries.push_back(static_cast<std::uint16_t>(v));
            }
        }
        Subspace s = row_space(MatrixGFq(rows, h.n, h.q, std::move(entries)));
        if (s.dim() != h.k) rows_well_formed = false;
        words.push_back(std::move(s));
    }

    FileCheck check;

    // the code is a set: distance is measured over distinct words, so a
    // duplicated codeword fails only the cardinality count
    std::set<Subspace> distinct_set(words.begin(), words.end());
    std::vector<Subspace> distinct(distinct_set.begin(), distinct_set.end());
    check.cardinality_ok = BigNat(distinct.size()) == h.declared_n && distinct.size() == words.size();

    if (!rows_well_formed) {
        check.min_distance_ok = false;
    } else if (distinct.size() < 2) {
        check.min_distance_ok = true;  // no pairs to measure
    } else {
        check.min_distance_ok = kernels::min_pairwise_injection_distance(distinct) == h.d;
    }

    // component table: widths n-k-jd, sizes summing to N; every codeword's
    // pivot block must start at a multiple of d within range
    bool comps_ok = rows_well_formed && h.d >= 1 && h.n >= h.k;
    if (comps_ok) {
        BigNat comp_total = 0;
        for (const nlohmann::json& comp : doc.at("components")) {
            if (!comp.contains("j") || !comp.contains("width") || !comp.contains("size")) {
                comps_ok = false;
                break;
            }
            const std::uint64_t j = comp.at("j").get<std::uint64_t>();
            const std::uint64_t width = comp.at("width").get<std::uint64_t>();
            comp_total += parse_decimal(comp.at("size").get<std::string>());
            if (j * h.d + h.k > h.n || width != h.n - h.k - j * h.d) comps_ok = false;
        }
        if (comp_total != h.declared_n) comps_ok = false;
    }
    if (comps_ok) {
        for (const Subspace& s : words) {
            const auto pivots = s.pivot_columns();
            if (pivots.empty()) {
                comps_ok = false;
                break;
            }
            const std::uint32_t start = pivots[0];
            if (start % h.d != 0 || start > h.n - h.k) comps_ok = false;
            for (std::uint32_t r = 0; r < pivots.size() && comps_ok; ++r)
                if (pivots[r] != start + r) comps_ok = false;
            if (!comps_ok) break;
        }
    }
    check.components_ok = comps_ok;
    return check;
}

}  // namespace lmrd
