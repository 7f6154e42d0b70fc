#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "qsi/channel.hpp"
#include "qsi/css_code.hpp"
#include "qsi/gf2.hpp"

namespace qsi::test {

inline std::vector<std::uint32_t> vec(std::span<const std::uint32_t> s) {
    return {s.begin(), s.end()};
}

/// Steane code check matrix (used for both hx and hz).
inline SparseBitMatrix steane() {
    return SparseBitMatrix::from_rows(3, 7, {{0, 2, 4, 6}, {1, 2, 5, 6}, {3, 4, 5, 6}});
}

inline CssCode steane_code() { return new_css(steane(), steane(), "steane"); }

/// All 2^rows row-space elements by direct enumeration. rows must be small.
inline std::set<std::string> enumerate_row_space(const SparseBitMatrix& m) {
    std::set<std::string> out;
    auto rows = m.dense_rows();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
        BitVec v(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            if ((mask >> r) & 1) v ^= rows[r];
        out.insert(v.to_string());
    }
    return out;
}

inline std::size_t brute_rank(const SparseBitMatrix& m) {
    std::size_t count = enumerate_row_space(m).size();
    std::size_t r = 0;
    while ((std::size_t{1} << r) < count) ++r;
    return r;
}

/// Whether M x = b has a solution, by enumerating all x. cols must be small.
inline bool brute_solvable(const SparseBitMatrix& m, const BitVec& b) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.cols()); ++mask) {
        BitVec x(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            if ((mask >> c) & 1) x.set(c, true);
        if (mat_vec(m, x) == b) return true;
    }
    return false;
}

/// Exact per-bit posterior LLRs of an iid BSC(eps) error given H e = s,
/// by enumerating all error patterns. cols must be small.
inline std::vector<double> posterior_llrs(const SparseBitMatrix& h, const BitVec& s, double eps) {
    std::size_t n = h.cols();
    std::vector<double> p0(n, 0.0), p1(n, 0.0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        BitVec e(n);
        for (std::size_t c = 0; c < n; ++c)
            if ((mask >> c) & 1) e.set(c, true);
        if (!(mat_vec(h, e) == s)) continue;
        double w = std::pow(eps, static_cast<double>(e.weight())) *
                   std::pow(1.0 - eps, static_cast<double>(n - e.weight()));
        for (std::size_t c = 0; c < n; ++c) (e.get(c) ? p1 : p0)[c] += w;
    }
    std::vector<double> llr(n);
    for (std::size_t c = 0; c < n; ++c) llr[c] = std::log(p0[c] / p1[c]);
    return llr;
}

struct MinWeightResult {
    BitVec argmin;
    std::size_t weight = 0;
    bool unique = false;
    bool found = false;
};

/// Minimum-weight solution of H e = s by enumeration. cols must be small.
inline MinWeightResult min_weight_solution(const SparseBitMatrix& h, const BitVec& s) {
    MinWeightResult res;
    res.argmin = BitVec(h.cols());
    std::size_t best = h.cols() + 1;
    std::size_t ties = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.cols()); ++mask) {
        BitVec e(h.cols());
        for (std::size_t c = 0; c < h.cols(); ++c)
            if ((mask >> c) & 1) e.set(c, true);
        if (!(mat_vec(h, e) == s)) continue;
        std::size_t w = e.weight();
        if (w < best) {
            best = w;
            ties = 1;
            res.argmin = e;
        } else if (w == best) {
            ++ties;
        }
    }
    res.found = best <= h.cols();
    res.weight = best;
    res.unique = ties == 1;
    return res;
}

inline BitVec random_bits(std::size_t n, double density, RngStream& rng) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next_double() < density) v.set(i, true);
    return v;
}

inline SparseBitMatrix random_sparse(std::size_t rows, std::size_t cols, double density,
                                     RngStream& rng) {
    std::vector<std::vector<std::uint32_t>> supports(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.next_double() < density) supports[r].push_back(static_cast<std::uint32_t>(c));
    return SparseBitMatrix::from_rows(rows, cols, std::move(supports));
}

inline CirculantSpec random_gb_spec(RngStream& rng) {
    CirculantSpec spec;
    spec.size = 2 + rng.next_below(11);
    auto pick = [&](std::vector<std::uint32_t>& supp) {
        std::size_t w = 1 + rng.next_below(std::min<std::size_t>(3, spec.size));
        std::set<std::uint32_t> seen;
        while (seen.size() < w) seen.insert(static_cast<std::uint32_t>(rng.next_below(spec.size)));
        supp.assign(seen.begin(), seen.end());
    };
    pick(spec.a_support);
    pick(spec.b_support);
    return spec;
}

/// Random acyclic Tanner graph: each new check joins one already-connected
/// bit to a few fresh bits, so the bipartite graph is a tree.
inline SparseBitMatrix random_tree(std::size_t max_bits, RngStream& rng) {
    std::size_t n = 2 + rng.next_below(max_bits - 1);
    std::vector<std::vector<std::uint32_t>> checks;
    std::size_t used = 1;
    while (used < n) {
        std::vector<std::uint32_t> supp;
        supp.push_back(static_cast<std::uint32_t>(rng.next_below(used)));
        std::size_t fresh = 1 + rng.next_below(std::min<std::size_t>(3, n - used));
        for (std::size_t i = 0; i < fresh; ++i)
            supp.push_back(static_cast<std::uint32_t>(used++));
        checks.push_back(std::move(supp));
    }
    std::size_t m = checks.size();
    return SparseBitMatrix::from_rows(m, n, std::move(checks));
}

} // namespace qsi::test
