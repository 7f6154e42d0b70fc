#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsi/gf2.hpp"

namespace qsi {

/// A CSS code given by its X and Z parity-check matrices. The pair must
/// satisfy hx * hz^T = 0.
struct CssCode {
    std::string name;
    SparseBitMatrix hx;
    SparseBitMatrix hz;
    std::size_t n = 0;
    std::size_t k = 0;
};

/// Validates orthogonality and computes n and k = n - rank(hx) - rank(hz).
CssCode new_css(SparseBitMatrix hx, SparseBitMatrix hz, std::string name = "");

/// Circulant supports for a generalized bicycle code with
/// hx = [A | B], hz = [B^T | A^T], where A and B are size x size
/// circulants: A(i, j) = 1 iff (j - i) mod size is in a_support.
struct CirculantSpec {
    std::size_t size = 0;
    std::vector<std::uint32_t> a_support;
    std::vector<std::uint32_t> b_support;
};

CssCode gb_construct(const CirculantSpec& spec, std::string name = "");

struct CodeReport {
    std::size_t n = 0, k = 0, mx = 0, mz = 0;
    std::map<std::size_t, std::size_t> hx_row_weights, hz_row_weights;
    std::map<std::size_t, std::size_t> hx_col_weights, hz_col_weights;
    bool hx_has_4cycles = false, hz_has_4cycles = false;

    std::string to_json() const;
};

CodeReport code_report(const CssCode& code);

/// One entry of a JSON code manifest: either a pair of alist paths or an
/// inline generalized bicycle spec.
struct ManifestEntry {
    std::string name;
    std::string hx_path, hz_path;   // relative paths resolve against the manifest directory
    bool has_gb = false;
    CirculantSpec gb;
};

std::vector<ManifestEntry> load_manifest(const std::string& path);

/// Loads the named entry (or the sole entry if name is empty) and builds
/// the code.
CssCode load_code(const std::string& manifest_path, const std::string& name = "");
CssCode build_code(const ManifestEntry& entry, const std::string& base_dir);

} // namespace qsi
