#include "qsi/osd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qsi {

namespace {

std::vector<std::uint32_t> order_by_reliability(std::size_t n, const std::vector<double>& soft) {
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::abs(soft[a]) < std::abs(soft[b]);
    });
    return order;
}

struct OsdElimination {
    OsdSelection selection;
    std::vector<std::uint32_t> pivot_rows;  // pivot_rows[i] pairs with basis_cols[i]
    std::vector<BitVec> rows;
    BitVec rhs;
    bool consistent = true;
};

// Full reduction with columns visited in reliability order. After the
// sweep, basis column i has a single one at pivot_rows[i], so the basis
// solution reads off the reduced rhs.
OsdElimination eliminate(const SparseBitMatrix& hz, const std::vector<double>& soft,
                         const BitVec* rhs_in) {
    OsdElimination e;
    e.selection.ordered_cols = order_by_reliability(hz.cols(), soft);
    e.rows = hz.dense_rows();
    e.rhs = rhs_in ? *rhs_in : BitVec(hz.rows());
    std::vector<char> row_used(hz.rows(), 0);
    for (auto c : e.selection.ordered_cols) {
        std::size_t pivot = hz.rows();
        for (std::size_t r = 0; r < hz.rows(); ++r) {
            if (!row_used[r] && e.rows[r].get(c)) {
                pivot = r;
                break;
            }
        }
        if (pivot == hz.rows()) {
            e.selection.complement_cols.push_back(c);
            continue;
        }
        row_used[pivot] = 1;
        for (std::size_t r = 0; r < hz.rows(); ++r) {
            if (r != pivot && e.rows[r].get(c)) {
                e.rows[r] ^= e.rows[pivot];
                if (e.rhs.get(pivot)) e.rhs.flip(r);
            }
        }
        e.selection.basis_cols.push_back(c);
        e.pivot_rows.push_back(static_cast<std::uint32_t>(pivot));
    }
    for (std::size_t r = 0; r < hz.rows(); ++r)
        if (!row_used[r] && e.rhs.get(r)) e.consistent = false;
    return e;
}

} // namespace

OsdSelection osd_selection(const SparseBitMatrix& hz, const std::vector<double>& soft) {
    if (soft.size() != hz.cols())
        throw std::invalid_argument("osd_selection: soft length does not match column count");
    return eliminate(hz, soft, nullptr).selection;
}

BitVec osd0_decode(const SparseBitMatrix& hz, const BitVec& syndrome,
                   const BitVec& mp_hard, const std::vector<double>& soft) {
    if (syndrome.size() != hz.rows())
        throw std::invalid_argument("osd0_decode: syndrome length does not match row count");
    if (mp_hard.size() != hz.cols())
        throw std::invalid_argument("osd0_decode: hard decision length does not match column count");
    if (soft.size() != hz.cols())
        throw std::invalid_argument("osd0_decode: soft length does not match column count");

    // Work on the residual t = s + hz * mp_hard: solving hz_B z = t over
    // the basis and flipping mp_hard by z on those columns keeps the
    // complement at mp_hard and meets the syndrome exactly.
    BitVec t = syndrome ^ mat_vec(hz, mp_hard);
    OsdElimination e = eliminate(hz, soft, &t);
    if (!e.consistent)
        throw std::invalid_argument("osd0_decode: syndrome is outside the column space");
    BitVec out = mp_hard;
    for (std::size_t i = 0; i < e.selection.basis_cols.size(); ++i)
        if (e.rhs.get(e.pivot_rows[i])) out.flip(e.selection.basis_cols[i]);
    return out;
}

} // namespace qsi
