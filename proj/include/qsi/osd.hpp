#pragma once

#include <cstdint>
#include <vector>

#include "qsi/gf2.hpp"

namespace qsi {

struct OsdSelection {
    std::vector<std::uint32_t> ordered_cols;     // all columns, by ascending |soft|
    std::vector<std::uint32_t> basis_cols;       // greedy independent set, rank(hz) columns
    std::vector<std::uint32_t> complement_cols;  // the rest, in ordered_cols order
};

/// Orders columns by reliability |soft| ascending (ties by column index)
/// and greedily picks the first linearly independent set.
OsdSelection osd_selection(const SparseBitMatrix& hz, const std::vector<double>& soft);

/// Order-zero ordered-statistics decoding: keep the message-passing hard
/// decision on the complement columns, re-solve the basis columns so that
/// hz * e = syndrome exactly. Throws if no solution exists, which cannot
/// happen for a syndrome of an actual error pattern.
BitVec osd0_decode(const SparseBitMatrix& hz, const BitVec& syndrome,
                   const BitVec& mp_hard, const std::vector<double>& soft);

} // namespace qsi
