#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsi/css_code.hpp"
#include "qsi/decoder.hpp"

namespace qsi {

/// Reliability of an X check: sum of |soft| over its support. Low values
/// mark checks whose qubits the decoder is least sure about.
double check_reliability(const SparseBitMatrix& hx, std::size_t row,
                         const std::vector<double>& soft);

/// Row indices sorted by ascending reliability, ties by row index.
std::vector<std::uint32_t> reliability_order(const std::vector<double>& reliabilities);

/// Number of checks with strictly smaller reliability than the given row.
std::size_t rank_of_check(std::size_t row, const std::vector<double>& reliabilities);

/// Soft-information change when moving the estimate from e to e + r_x:
///   sum over supp(hard + e) of |soft_i|  -  sum over supp(hard + e + r_x).
/// Positive when the flip moves the estimate toward the hard decision.
double delta_metric(const BitVec& e, const BitVec& r_x, const BitVec& hard,
                    const std::vector<double>& soft);

/// Block decomposition of hz against a set of inactivated columns:
///   rows touching the set    -> [ h_in | a     ]
///   remaining rows           -> [ 0    | h_out ]
/// with in_cols the set itself and out_cols its complement.
struct Restriction {
    std::vector<std::uint32_t> in_cols, out_cols;
    std::vector<std::uint32_t> in_rows, out_rows;
    SparseBitMatrix h_in, a, h_out;
};

Restriction restrict_to_support(const SparseBitMatrix& hz,
                                std::span<const std::uint32_t> support);

struct SiConfig {
    int lambda_max = 10;
    std::optional<double> lambda_frac;     // overrides lambda_max as ceil(frac * m_x)
    std::optional<int> restricted_max_iters;

    int resolve_lambda_max(std::size_t m_x) const;
};

struct SiOutcome {
    std::optional<BitVec> estimate;
    int inactivations_used = 0;
    bool mp_converged = false;   // whether the initial attempt already converged
    int mp_iterations = 0;
    int mp_fail_count = 0;       // restricted attempts that did not converge
    int solve_fail_count = 0;    // restricted attempts with an unsolvable inner system
    std::vector<std::uint32_t> reliability_order;
};

/// Decodes with message passing. On failure, attempt lambda restricts
/// the graph to the support of the lambda-th least reliable X check for
/// lambda = 1, 2, ..., re-decodes the outer block and solves the inner
/// block exactly.
SiOutcome si_decode(const CssCode& code, const BitVec& syndrome,
                    const std::vector<double>& priors, const DecoderConfig& mp_cfg,
                    const SiConfig& si_cfg);

} // namespace qsi
