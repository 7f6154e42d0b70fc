#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsi/bitvec.hpp"

namespace qsi {

/// Sparse binary matrix with both row and column adjacency, entries
/// stored as sorted, duplicate-free index lists.
class SparseBitMatrix {
public:
    SparseBitMatrix() = default;
    SparseBitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_supp_(rows), col_supp_(cols) {}

    /// Builds from per-row column indices. Indices may arrive unsorted;
    /// duplicates and out-of-range entries are rejected.
    static SparseBitMatrix from_rows(std::size_t rows, std::size_t cols,
                                     std::vector<std::vector<std::uint32_t>> row_supports);

    static SparseBitMatrix from_dense_rows(std::span<const BitVec> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return nnz_; }

    std::span<const std::uint32_t> row(std::size_t r) const { return row_supp_[r]; }
    std::span<const std::uint32_t> col(std::size_t c) const { return col_supp_[c]; }

    bool get(std::size_t r, std::size_t c) const;

    SparseBitMatrix transposed() const;

    /// Submatrix on the given row and column index lists (sorted, unique).
    /// Output indices are positions within the lists.
    SparseBitMatrix submatrix(std::span<const std::uint32_t> row_ids,
                              std::span<const std::uint32_t> col_ids) const;

    std::vector<BitVec> dense_rows() const;
    BitVec dense_row(std::size_t r) const;

    bool operator==(const SparseBitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_supp_ == o.row_supp_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, nnz_ = 0;
    std::vector<std::vector<std::uint32_t>> row_supp_;
    std::vector<std::vector<std::uint32_t>> col_supp_;
};

/// y = M x over GF(2).
BitVec mat_vec(const SparseBitMatrix& m, const BitVec& x);

struct RrefResult {
    SparseBitMatrix rref;
    std::vector<std::uint32_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form via Gaussian elimination. Pivots take the
/// first available row per pivot column, scanning columns left to right,
/// so the result is the canonical RREF of the row space.
RrefResult rref(const SparseBitMatrix& m);

std::size_t rank(const SparseBitMatrix& m);

/// One solution of M x = b, or nullopt if the system is inconsistent.
/// Free variables are set to zero, which makes the solution unique for a
/// fixed pivot order.
std::optional<BitVec> solve(const SparseBitMatrix& m, const BitVec& b);

/// Whether v lies in the row space of m.
bool in_row_space(const SparseBitMatrix& m, const BitVec& v);

/// Reduced row basis of a matrix, cached for repeated membership tests.
class RowSpace {
public:
    static RowSpace of(const SparseBitMatrix& m);

    bool contains(const BitVec& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<BitVec> rows_;
    std::vector<std::uint32_t> pivot_cols_;
    std::size_t cols_ = 0;
};

} // namespace qsi
