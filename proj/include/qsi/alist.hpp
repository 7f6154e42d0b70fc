#pragma once

#include <iosfwd>
#include <string>

#include "qsi/gf2.hpp"

namespace qsi {

/// Reads a parity-check matrix in alist format. The header is
/// "N M" (columns then rows); index lists are 1-based and may be padded
/// with zeros up to the stated maximum degree.
SparseBitMatrix load_alist(const std::string& path);
SparseBitMatrix read_alist(std::istream& in);

/// Writes canonical alist: ascending index lists, no zero padding.
void write_alist(const SparseBitMatrix& m, const std::string& path);
void write_alist(const SparseBitMatrix& m, std::ostream& out);

} // namespace qsi
