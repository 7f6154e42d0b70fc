#include "qsi/si.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qsi {

double check_reliability(const SparseBitMatrix& hx, std::size_t row,
                         const std::vector<double>& soft) {
    if (row >= hx.rows()) throw std::invalid_argument("check_reliability: row out of range");
    if (soft.size() != hx.cols())
        throw std::invalid_argument("check_reliability: soft length does not match column count");
    double sum = 0.0;
    for (auto c : hx.row(row)) sum += std::abs(soft[c]);
    return sum;
}

std::vector<std::uint32_t> reliability_order(const std::vector<double>& reliabilities) {
    std::vector<std::uint32_t> order(reliabilities.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return reliabilities[a] < reliabilities[b];
    });
    return order;
}

std::size_t rank_of_check(std::size_t row, const std::vector<double>& reliabilities) {
    if (row >= reliabilities.size()) throw std::invalid_argument("rank_of_check: row out of range");
    std::size_t rank = 0;
    for (double r : reliabilities)
        if (r < reliabilities[row]) ++rank;
    return rank;
}

double delta_metric(const BitVec& e, const BitVec& r_x, const BitVec& hard,
                    const std::vector<double>& soft) {
    if (e.size() != soft.size() || r_x.size() != soft.size() || hard.size() != soft.size())
        throw std::invalid_argument("delta_metric: length mismatch");
    double delta = 0.0;
    for (std::size_t i = 0; i < soft.size(); ++i) {
        if (!r_x.get(i)) continue;
        double a = std::abs(soft[i]);
        delta += e.get(i) == hard.get(i) ? -a : a;
    }
    return delta;
}

Restriction restrict_to_support(const SparseBitMatrix& hz,
                                std::span<const std::uint32_t> support) {
    if (support.empty()) throw std::invalid_argument("restrict_to_support: support is empty");
    std::vector<char> in_col(hz.cols(), 0);
    for (auto c : support) {
        if (c >= hz.cols())
            throw std::invalid_argument("restrict_to_support: column index out of range");
        in_col[c] = 1;
    }
    Restriction res;
    for (std::size_t c = 0; c < hz.cols(); ++c)
        (in_col[c] ? res.in_cols : res.out_cols).push_back(static_cast<std::uint32_t>(c));
    for (std::size_t r = 0; r < hz.rows(); ++r) {
        bool touches = false;
        for (auto c : hz.row(r))
            if (in_col[c]) { touches = true; break; }
        (touches ? res.in_rows : res.out_rows).push_back(static_cast<std::uint32_t>(r));
    }
    res.h_in = hz.submatrix(res.in_rows, res.in_cols);
    res.a = hz.submatrix(res.in_rows, res.out_cols);
    res.h_out = hz.submatrix(res.out_rows, res.out_cols);
    return res;
}

int SiConfig::resolve_lambda_max(std::size_t m_x) const {
    long lm;
    if (lambda_frac) {
        if (!(*lambda_frac > 0.0) || !(*lambda_frac <= 1.0))
            throw std::invalid_argument("SiConfig: lambda_frac must be in (0, 1]");
        lm = static_cast<long>(std::ceil(*lambda_frac * static_cast<double>(m_x)));
        lm = std::max(lm, 1l);
    } else {
        lm = lambda_max;
    }
    if (lm < 1) throw std::invalid_argument("SiConfig: lambda_max must be at least 1");
    return static_cast<int>(std::min<long>(lm, static_cast<long>(m_x)));
}

SiOutcome si_decode(const CssCode& code, const BitVec& syndrome,
                    const std::vector<double>& priors, const DecoderConfig& mp_cfg,
                    const SiConfig& si_cfg) {
    int lambda_max = si_cfg.resolve_lambda_max(code.hx.rows());

    SiOutcome out;
    DecodeOutcome first = decode(code.hz, syndrome, priors, mp_cfg);
    out.mp_converged = first.converged;
    out.mp_iterations = first.iterations;
    if (first.converged) {
        out.estimate = std::move(first.hard);
        return out;
    }

    // Check reliabilities come from the failed attempt's soft output and
    // are computed once; every lambda reuses the same ordering.
    std::vector<double> rels(code.hx.rows());
    for (std::size_t r = 0; r < code.hx.rows(); ++r)
        rels[r] = check_reliability(code.hx, r, first.soft);
    out.reliability_order = reliability_order(rels);

    DecoderConfig sub_cfg = mp_cfg;
    if (si_cfg.restricted_max_iters) sub_cfg.max_iters = *si_cfg.restricted_max_iters;

    // Checks are inactivated one at a time: attempt lambda restricts to
    // the support of the lambda-th least reliable check alone.
    for (int lambda = 1; lambda <= lambda_max; ++lambda) {
        auto supp = code.hx.row(out.reliability_order[lambda - 1]);
        if (supp.empty()) {
            ++out.mp_fail_count;
            continue;
        }
        Restriction res = restrict_to_support(code.hz, supp);

        BitVec s_out(res.out_rows.size());
        for (std::size_t i = 0; i < res.out_rows.size(); ++i)
            s_out.set(i, syndrome.get(res.out_rows[i]));
        std::vector<double> p_out(res.out_cols.size());
        for (std::size_t i = 0; i < res.out_cols.size(); ++i)
            p_out[i] = priors[res.out_cols[i]];

        DecodeOutcome sub = decode(res.h_out, s_out, p_out, sub_cfg);
        if (!sub.converged) {
            ++out.mp_fail_count;
            continue;
        }

        BitVec rhs(res.in_rows.size());
        for (std::size_t i = 0; i < res.in_rows.size(); ++i)
            rhs.set(i, syndrome.get(res.in_rows[i]));
        rhs ^= mat_vec(res.a, sub.hard);
        std::optional<BitVec> e_in = solve(res.h_in, rhs);
        if (!e_in) {
            ++out.solve_fail_count;
            continue;
        }

        BitVec estimate(code.n);
        for (std::size_t i = 0; i < res.in_cols.size(); ++i)
            if (e_in->get(i)) estimate.set(res.in_cols[i], true);
        for (std::size_t i = 0; i < res.out_cols.size(); ++i)
            if (sub.hard.get(i)) estimate.set(res.out_cols[i], true);
        out.estimate = std::move(estimate);
        out.inactivations_used = lambda;
        return out;
    }
    out.inactivations_used = lambda_max;
    return out;
}

} // namespace qsi
