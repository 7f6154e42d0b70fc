#include "qsi/css_code.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qsi/alist.hpp"

namespace qsi {

CssCode new_css(SparseBitMatrix hx, SparseBitMatrix hz, std::string name) {
    if (hx.cols() != hz.cols())
        throw std::invalid_argument("new_css: hx and hz must have the same column count");
    for (std::size_t r = 0; r < hx.rows(); ++r) {
        BitVec row = hx.dense_row(r);
        for (std::size_t s = 0; s < hz.rows(); ++s) {
            unsigned parity = 0;
            for (auto c : hz.row(s)) parity ^= static_cast<unsigned>(row.get(c));
            if (parity)
                throw std::invalid_argument("new_css: hx row " + std::to_string(r) +
                                            " is not orthogonal to hz row " + std::to_string(s));
        }
    }
    CssCode code;
    code.name = std::move(name);
    code.n = hx.cols();
    std::size_t rx = rank(hx), rz = rank(hz);
    code.k = code.n - rx - rz;
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    return code;
}

namespace {

SparseBitMatrix circulant_pair(std::size_t size,
                               const std::vector<std::uint32_t>& left,
                               const std::vector<std::uint32_t>& right) {
    std::vector<std::vector<std::uint32_t>> rows(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (auto o : left) rows[i].push_back(static_cast<std::uint32_t>((i + o) % size));
        for (auto o : right) rows[i].push_back(static_cast<std::uint32_t>(size + (i + o) % size));
    }
    return SparseBitMatrix::from_rows(size, 2 * size, std::move(rows));
}

std::vector<std::uint32_t> negate_mod(const std::vector<std::uint32_t>& supp, std::size_t size) {
    std::vector<std::uint32_t> out;
    out.reserve(supp.size());
    for (auto o : supp) out.push_back(static_cast<std::uint32_t>((size - o % size) % size));
    return out;
}

} // namespace

CssCode gb_construct(const CirculantSpec& spec, std::string name) {
    if (spec.size == 0) throw std::invalid_argument("gb_construct: circulant size must be positive");
    auto check_support = [&](const std::vector<std::uint32_t>& s, const char* which) {
        if (s.empty())
            throw std::invalid_argument(std::string("gb_construct: empty ") + which + " support");
        std::set<std::uint32_t> seen;
        for (auto o : s) {
            if (o >= spec.size)
                throw std::invalid_argument(std::string("gb_construct: ") + which +
                                            " support offset out of range");
            if (!seen.insert(o).second)
                throw std::invalid_argument(std::string("gb_construct: duplicate offset in ") + which);
        }
    };
    check_support(spec.a_support, "a");
    check_support(spec.b_support, "b");
    // A^T is the circulant with negated support, so hz = [B^T | A^T].
    SparseBitMatrix hx = circulant_pair(spec.size, spec.a_support, spec.b_support);
    SparseBitMatrix hz = circulant_pair(spec.size, negate_mod(spec.b_support, spec.size),
                                        negate_mod(spec.a_support, spec.size));
    return new_css(std::move(hx), std::move(hz), std::move(name));
}

namespace {

std::map<std::size_t, std::size_t> row_weight_hist(const SparseBitMatrix& m) {
    std::map<std::size_t, std::size_t> h;
    for (std::size_t r = 0; r < m.rows(); ++r) ++h[m.row(r).size()];
    return h;
}

std::map<std::size_t, std::size_t> col_weight_hist(const SparseBitMatrix& m) {
    std::map<std::size_t, std::size_t> h;
    for (std::size_t c = 0; c < m.cols(); ++c) ++h[m.col(c).size()];
    return h;
}

// A 4-cycle exists iff some row pair shares two or more columns.
bool has_4cycles(const SparseBitMatrix& m) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto supp = m.col(c);
        for (std::size_t i = 0; i < supp.size(); ++i)
            for (std::size_t j = i + 1; j < supp.size(); ++j)
                if (!pairs.insert({supp[i], supp[j]}).second) return true;
    }
    return false;
}

nlohmann::json hist_json(const std::map<std::size_t, std::size_t>& h) {
    nlohmann::json j = nlohmann::json::object();
    for (auto [w, c] : h) j[std::to_string(w)] = c;
    return j;
}

} // namespace

CodeReport code_report(const CssCode& code) {
    CodeReport rep;
    rep.n = code.n;
    rep.k = code.k;
    rep.mx = code.hx.rows();
    rep.mz = code.hz.rows();
    rep.hx_row_weights = row_weight_hist(code.hx);
    rep.hz_row_weights = row_weight_hist(code.hz);
    rep.hx_col_weights = col_weight_hist(code.hx);
    rep.hz_col_weights = col_weight_hist(code.hz);
    rep.hx_has_4cycles = has_4cycles(code.hx);
    rep.hz_has_4cycles = has_4cycles(code.hz);
    return rep;
}

std::string CodeReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["k"] = k;
    j["mx"] = mx;
    j["mz"] = mz;
    j["hx_row_weights"] = hist_json(hx_row_weights);
    j["hz_row_weights"] = hist_json(hz_row_weights);
    j["hx_col_weights"] = hist_json(hx_col_weights);
    j["hz_col_weights"] = hist_json(hz_col_weights);
    j["hx_has_4cycles"] = hx_has_4cycles;
    j["hz_has_4cycles"] = hz_has_4cycles;
    return j.dump(2);
}

namespace {

ManifestEntry parse_entry(const nlohmann::json& j) {
    ManifestEntry e;
    if (!j.contains("name") || !j["name"].is_string())
        throw std::invalid_argument("manifest: entry missing string field 'name'");
    e.name = j["name"].get<std::string>();
    bool has_paths = j.contains("hx_path") || j.contains("hz_path");
    e.has_gb = j.contains("gb");
    if (has_paths == e.has_gb)
        throw std::invalid_argument("manifest: entry '" + e.name +
                                 "' must have either hx_path/hz_path or gb");
    if (has_paths) {
        if (!j.contains("hx_path") || !j.contains("hz_path"))
            throw std::invalid_argument("manifest: entry '" + e.name + "' needs both hx_path and hz_path");
        e.hx_path = j["hx_path"].get<std::string>();
        e.hz_path = j["hz_path"].get<std::string>();
    } else {
        const auto& g = j["gb"];
        if (!g.contains("size") || !g.contains("a_support") || !g.contains("b_support"))
            throw std::invalid_argument("manifest: gb spec needs size, a_support, b_support");
        e.gb.size = g["size"].get<std::size_t>();
        e.gb.a_support = g["a_support"].get<std::vector<std::uint32_t>>();
        e.gb.b_support = g["b_support"].get<std::vector<std::uint32_t>>();
    }
    return e;
}

} // namespace

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("manifest: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error("manifest: parse error in " + path + ": " + ex.what());
    }
    std::vector<ManifestEntry> out;
    if (j.is_array()) {
        for (const auto& item : j) out.push_back(parse_entry(item));
    } else if (j.is_object() && j.contains("codes") && j["codes"].is_array()) {
        for (const auto& item : j["codes"]) out.push_back(parse_entry(item));
    } else if (j.is_object()) {
        out.push_back(parse_entry(j));
    } else {
        throw std::runtime_error("manifest: expected an object or array of entries");
    }
    return out;
}

CssCode build_code(const ManifestEntry& entry, const std::string& base_dir) {
    if (entry.has_gb) return gb_construct(entry.gb, entry.name);
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        if (fp.is_absolute() || base_dir.empty()) return fp;
        return std::filesystem::path(base_dir) / fp;
    };
    SparseBitMatrix hx = load_alist(resolve(entry.hx_path).string());
    SparseBitMatrix hz = load_alist(resolve(entry.hz_path).string());
    return new_css(std::move(hx), std::move(hz), entry.name);
}

CssCode load_code(const std::string& manifest_path, const std::string& name) {
    auto entries = load_manifest(manifest_path);
    std::string base = std::filesystem::path(manifest_path).parent_path().string();
    if (name.empty()) {
        if (entries.size() != 1)
            throw std::invalid_argument("manifest: " + manifest_path +
                                        " does not have exactly one entry, specify one by name");
        return build_code(entries[0], base);
    }
    for (const auto& e : entries)
        if (e.name == name) return build_code(e, base);
    throw std::invalid_argument("manifest: no entry named '" + name + "' in " + manifest_path);
}

} // namespace qsi
