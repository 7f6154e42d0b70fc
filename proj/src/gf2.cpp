#include "qsi/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsi {

SparseBitMatrix SparseBitMatrix::from_rows(std::size_t rows, std::size_t cols,
                                           std::vector<std::vector<std::uint32_t>> row_supports) {
    if (row_supports.size() != rows)
        throw std::invalid_argument("SparseBitMatrix: row support count does not match row count");
    SparseBitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto& supp = row_supports[r];
        std::sort(supp.begin(), supp.end());
        if (std::adjacent_find(supp.begin(), supp.end()) != supp.end())
            throw std::invalid_argument("SparseBitMatrix: duplicate entry in row support");
        if (!supp.empty() && supp.back() >= cols)
            throw std::invalid_argument("SparseBitMatrix: column index out of range");
        for (auto c : supp) m.col_supp_[c].push_back(static_cast<std::uint32_t>(r));
        m.nnz_ += supp.size();
        m.row_supp_[r] = std::move(supp);
    }
    return m;
}

SparseBitMatrix SparseBitMatrix::from_dense_rows(std::span<const BitVec> rows, std::size_t cols) {
    std::vector<std::vector<std::uint32_t>> supports;
    supports.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw std::invalid_argument("SparseBitMatrix: dense row width mismatch");
        supports.push_back(r.ones());
    }
    return from_rows(rows.size(), cols, std::move(supports));
}

bool SparseBitMatrix::get(std::size_t r, std::size_t c) const {
    const auto& supp = row_supp_[r];
    return std::binary_search(supp.begin(), supp.end(), static_cast<std::uint32_t>(c));
}

SparseBitMatrix SparseBitMatrix::transposed() const {
    SparseBitMatrix t(cols_, rows_);
    t.row_supp_ = col_supp_;
    t.col_supp_ = row_supp_;
    t.nnz_ = nnz_;
    return t;
}

SparseBitMatrix SparseBitMatrix::submatrix(std::span<const std::uint32_t> row_ids,
                                           std::span<const std::uint32_t> col_ids) const {
    for (auto r : row_ids)
        if (r >= rows_) throw std::invalid_argument("submatrix: row index out of range");
    for (auto c : col_ids)
        if (c >= cols_) throw std::invalid_argument("submatrix: column index out of range");
    std::vector<std::int64_t> col_pos(cols_, -1);
    for (std::size_t j = 0; j < col_ids.size(); ++j) col_pos[col_ids[j]] = static_cast<std::int64_t>(j);
    std::vector<std::vector<std::uint32_t>> supports(row_ids.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i) {
        for (auto c : row_supp_[row_ids[i]]) {
            if (col_pos[c] >= 0) supports[i].push_back(static_cast<std::uint32_t>(col_pos[c]));
        }
    }
    return from_rows(row_ids.size(), col_ids.size(), std::move(supports));
}

std::vector<BitVec> SparseBitMatrix::dense_rows() const {
    std::vector<BitVec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(dense_row(r));
    return out;
}

BitVec SparseBitMatrix::dense_row(std::size_t r) const {
    return BitVec::from_indices(cols_, row_supp_[r]);
}

BitVec mat_vec(const SparseBitMatrix& m, const BitVec& x) {
    if (x.size() != m.cols())
        throw std::invalid_argument("mat_vec: vector length does not match column count");
    BitVec y(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        unsigned parity = 0;
        for (auto c : m.row(r)) parity ^= static_cast<unsigned>(x.get(c));
        if (parity) y.set(r, true);
    }
    return y;
}

namespace {

struct Elimination {
    std::vector<BitVec> rows;
    std::vector<std::uint32_t> pivot_cols;
};

// Full reduction: after processing, each pivot column has a single one,
// and pivot rows are ordered by pivot column. Nonzero rows occupy the top.
Elimination eliminate(const SparseBitMatrix& m, BitVec* aug) {
    Elimination e;
    e.rows = m.dense_rows();
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        std::size_t p = next;
        while (p < m.rows() && !e.rows[p].get(c)) ++p;
        if (p == m.rows()) continue;
        std::swap(e.rows[p], e.rows[next]);
        if (aug) {
            bool tp = aug->get(p), tn = aug->get(next);
            aug->set(p, tn);
            aug->set(next, tp);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != next && e.rows[r].get(c)) {
                e.rows[r] ^= e.rows[next];
                if (aug && aug->get(next)) aug->flip(r);
            }
        }
        e.pivot_cols.push_back(static_cast<std::uint32_t>(c));
        ++next;
    }
    return e;
}

} // namespace

RrefResult rref(const SparseBitMatrix& m) {
    Elimination e = eliminate(m, nullptr);
    RrefResult out;
    out.rank = e.pivot_cols.size();
    out.pivot_cols = std::move(e.pivot_cols);
    out.rref = SparseBitMatrix::from_dense_rows(e.rows, m.cols());
    return out;
}

std::size_t rank(const SparseBitMatrix& m) {
    return eliminate(m, nullptr).pivot_cols.size();
}

std::optional<BitVec> solve(const SparseBitMatrix& m, const BitVec& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: rhs length does not match row count");
    BitVec aug = b;
    Elimination e = eliminate(m, &aug);
    for (std::size_t r = e.pivot_cols.size(); r < m.rows(); ++r)
        if (aug.get(r)) return std::nullopt;
    BitVec x(m.cols());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        if (aug.get(i)) x.set(e.pivot_cols[i], true);
    return x;
}

bool in_row_space(const SparseBitMatrix& m, const BitVec& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("in_row_space: vector length does not match column count");
    return solve(m.transposed(), v).has_value();
}

RowSpace RowSpace::of(const SparseBitMatrix& m) {
    Elimination e = eliminate(m, nullptr);
    RowSpace rs;
    rs.cols_ = m.cols();
    rs.pivot_cols_ = std::move(e.pivot_cols);
    e.rows.resize(rs.pivot_cols_.size(), BitVec(m.cols()));
    rs.rows_ = std::move(e.rows);
    return rs;
}

bool RowSpace::contains(const BitVec& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("RowSpace::contains: vector length mismatch");
    BitVec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (r.get(pivot_cols_[i])) r ^= rows_[i];
    return r.none();
}

} // namespace qsi
