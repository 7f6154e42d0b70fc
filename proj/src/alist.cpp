#include "qsi/alist.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsi {

namespace {

// One list per line; zero entries are padding and carry no index.
std::vector<long> line_ints(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument(std::string("alist: missing ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::vector<long> vals;
    long v;
    while (ss >> v) vals.push_back(v);
    if (!ss.eof()) throw std::invalid_argument(std::string("alist: malformed ") + what);
    return vals;
}

std::vector<long> degree_list(std::istream& in, long count, long max_deg, const char* what) {
    auto degs = line_ints(in, what);
    if (static_cast<long>(degs.size()) != count)
        throw std::invalid_argument(std::string("alist: wrong length ") + what);
    for (long d : degs)
        if (d < 0 || d > max_deg)
            throw std::invalid_argument(std::string("alist: degree out of range in ") + what);
    return degs;
}

} // namespace

SparseBitMatrix read_alist(std::istream& in) {
    auto header = line_ints(in, "header");
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw std::invalid_argument("alist: malformed header");
    long n = header[0], m = header[1];
    auto max_degs = line_ints(in, "max degree line");
    if (max_degs.size() != 2 || max_degs[0] < 0 || max_degs[1] < 0)
        throw std::invalid_argument("alist: malformed max degree line");

    auto col_deg = degree_list(in, n, max_degs[0], "column degree list");
    auto row_deg = degree_list(in, m, max_degs[1], "row degree list");

    // Column lists define the matrix; row lists are read and checked for
    // consistency.
    std::vector<std::vector<std::uint32_t>> rows(m);
    for (long j = 0; j < n; ++j) {
        long seen = 0;
        for (long r : line_ints(in, "column entry list")) {
            if (r == 0) continue;
            if (r < 1 || r > m) throw std::invalid_argument("alist: row index out of range");
            rows[r - 1].push_back(static_cast<std::uint32_t>(j));
            ++seen;
        }
        if (seen != col_deg[j])
            throw std::invalid_argument("alist: column degree does not match entries");
    }
    for (long i = 0; i < m; ++i) {
        std::vector<std::uint32_t> cols_seen;
        for (long c : line_ints(in, "row entry list")) {
            if (c == 0) continue;
            if (c < 1 || c > n) throw std::invalid_argument("alist: column index out of range");
            cols_seen.push_back(static_cast<std::uint32_t>(c - 1));
        }
        if (static_cast<long>(cols_seen.size()) != row_deg[i])
            throw std::invalid_argument("alist: row degree does not match entries");
        std::sort(cols_seen.begin(), cols_seen.end());
        std::vector<std::uint32_t> expect = rows[i];
        std::sort(expect.begin(), expect.end());
        if (cols_seen != expect)
            throw std::invalid_argument("alist: row and column lists disagree");
    }
    return SparseBitMatrix::from_rows(static_cast<std::size_t>(m), static_cast<std::size_t>(n),
                                      std::move(rows));
}

SparseBitMatrix load_alist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("alist: cannot open " + path);
    return read_alist(in);
}

void write_alist(const SparseBitMatrix& m, std::ostream& out) {
    std::size_t max_col = 0, max_row = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) max_col = std::max(max_col, m.col(c).size());
    for (std::size_t r = 0; r < m.rows(); ++r) max_row = std::max(max_row, m.row(r).size());
    out << m.cols() << ' ' << m.rows() << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (std::size_t c = 0; c < m.cols(); ++c)
        out << m.col(c).size() << (c + 1 < m.cols() ? ' ' : '\n');
    if (m.cols() == 0) out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r)
        out << m.row(r).size() << (r + 1 < m.rows() ? ' ' : '\n');
    if (m.rows() == 0) out << '\n';
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto supp = m.col(c);
        for (std::size_t t = 0; t < supp.size(); ++t)
            out << supp[t] + 1 << (t + 1 < supp.size() ? ' ' : '\n');
        if (supp.empty()) out << '\n';
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto supp = m.row(r);
        for (std::size_t t = 0; t < supp.size(); ++t)
            out << supp[t] + 1 << (t + 1 < supp.size() ? ' ' : '\n');
        if (supp.empty()) out << '\n';
    }
}

void write_alist(const SparseBitMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("alist: cannot open " + path + " for writing");
    write_alist(m, out);
    if (!out) throw std::runtime_error("alist: write failed for " + path);
}

} // namespace qsi
