#include "qsi/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qsi/osd.hpp"

namespace qsi {

std::string algorithm_name(MpAlgorithm a) {
    switch (a) {
        case MpAlgorithm::SumProduct: return "sp";
        case MpAlgorithm::MinSum: return "ms";
        case MpAlgorithm::NormalizedMinSum: return "nms";
    }
    return "?";
}

std::string schedule_name(Schedule s) {
    switch (s) {
        case Schedule::Flooding: return "flooding";
        case Schedule::Serial: return "serial";
        case Schedule::Layered: return "layered";
    }
    return "?";
}

std::string post_name(PostProcess p) {
    switch (p) {
        case PostProcess::None: return "none";
        case PostProcess::Si: return "si";
        case PostProcess::Osd0: return "osd0";
    }
    return "?";
}

MpAlgorithm parse_algorithm(const std::string& s) {
    if (s == "sp") return MpAlgorithm::SumProduct;
    if (s == "ms") return MpAlgorithm::MinSum;
    if (s == "nms") return MpAlgorithm::NormalizedMinSum;
    throw std::invalid_argument("unknown algorithm '" + s + "' (expected sp, ms or nms)");
}

Schedule parse_schedule(const std::string& s) {
    if (s == "flooding") return Schedule::Flooding;
    if (s == "serial") return Schedule::Serial;
    if (s == "layered") return Schedule::Layered;
    throw std::invalid_argument("unknown schedule '" + s + "' (expected flooding, serial or layered)");
}

PostProcess parse_post(const std::string& s) {
    if (s == "none") return PostProcess::None;
    if (s == "si") return PostProcess::Si;
    if (s == "osd0") return PostProcess::Osd0;
    throw std::invalid_argument("unknown post-processing '" + s + "' (expected none, si or osd0)");
}

bool is_success(const CssCode& code, const BitVec& e, const BitVec& e_hat) {
    if (e.size() != code.n || e_hat.size() != code.n)
        throw std::invalid_argument("is_success: vector length does not match code length");
    return in_row_space(code.hx, e ^ e_hat);
}

void ExperimentSpec::validate() const {
    if (p_values.empty()) throw std::invalid_argument("ExperimentSpec: empty p grid");
    for (double p : p_values)
        if (!(p >= 0.0) || !(p < 1.0))
            throw std::invalid_argument("ExperimentSpec: p must be in [0, 1)");
    if (trials < 1) throw std::invalid_argument("ExperimentSpec: trials must be at least 1");
    if (threads < 1) throw std::invalid_argument("ExperimentSpec: threads must be at least 1");
    if (max_logical_errors < 0)
        throw std::invalid_argument("ExperimentSpec: max_logical_errors must be non-negative");
}

TrialResult run_trial(const TrialContext& ctx, long trial) {
    RngStream rng(ctx.spec.seed, ctx.point_index, static_cast<std::uint64_t>(trial));
    BitVec e = sample_x_error(ctx.code.n, ctx.eps, rng);
    BitVec s = mat_vec(ctx.code.hz, e);

    TrialResult res;
    res.error_weight = static_cast<int>(e.weight());

    auto classify = [&](const BitVec& e_hat, bool via_post) {
        bool ok = ctx.hx_space.contains(e ^ e_hat);
        if (via_post)
            res.outcome = ok ? TrialOutcome::PostSuccess : TrialOutcome::PostLogicalError;
        else
            res.outcome = ok ? TrialOutcome::ConvergedSuccess : TrialOutcome::ConvergedLogicalError;
    };

    if (ctx.spec.post == PostProcess::Si) {
        SiOutcome out = si_decode(ctx.code, s, ctx.priors, ctx.spec.decoder, ctx.spec.si);
        res.mp_converged = out.mp_converged;
        res.mp_iterations = out.mp_iterations;
        res.post_invoked = !out.mp_converged;
        res.inactivations = out.inactivations_used;
        if (!out.estimate)
            res.outcome = TrialOutcome::Failure;
        else
            classify(*out.estimate, res.post_invoked);
        return res;
    }

    DecodeOutcome out = decode(ctx.code.hz, s, ctx.priors, ctx.spec.decoder);
    res.mp_converged = out.converged;
    res.mp_iterations = out.iterations;
    if (out.converged) {
        classify(out.hard, false);
        return res;
    }
    if (ctx.spec.post == PostProcess::Osd0) {
        res.post_invoked = true;
        classify(osd0_decode(ctx.code.hz, s, out.hard, out.soft), true);
        return res;
    }
    res.outcome = TrialOutcome::Failure;
    return res;
}

std::pair<double, double> wilson_interval(long successes, long total) {
    constexpr double z = 1.959963984540054;
    if (total <= 0) throw std::invalid_argument("wilson_interval: total must be positive");
    double n = static_cast<double>(total);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

bool is_error(TrialOutcome o) {
    return o == TrialOutcome::ConvergedLogicalError || o == TrialOutcome::PostLogicalError ||
           o == TrialOutcome::Failure;
}

PointStats run_point(const CssCode& code, const RowSpace& hx_space, const ExperimentSpec& spec,
                     std::size_t point_index) {
    TrialContext ctx{code, hx_space, spec,
                     marginal_flip_prob(DepolarizingParams::depolarizing(spec.p_values[point_index]),
                                        PauliBasis::X),
                     {}, point_index};
    ctx.priors = a_priori_llrs(code.n, ctx.eps, spec.decoder.algorithm);

    PointStats st;
    st.p = spec.p_values[point_index];
    st.eps = ctx.eps;

    long mp_converged = 0, post_invocations = 0;
    long long inactivations_sum = 0;

    // Trials run in waves; each wave is computed in parallel but consumed
    // strictly in index order, so aggregates and the early-stop cut do not
    // depend on the thread count.
    constexpr long kBatch = 256;
    long wave = kBatch * spec.threads;
    std::vector<TrialResult> results(wave);
    bool stopped = false;
    for (long lo = 0; lo < spec.trials && !stopped; lo += wave) {
        long hi = std::min(spec.trials, lo + wave);
        long count = hi - lo;
        if (spec.threads == 1 || count <= kBatch) {
            for (long t = 0; t < count; ++t) results[t] = run_trial(ctx, lo + t);
        } else {
            std::vector<std::thread> pool;
            long per = (count + spec.threads - 1) / spec.threads;
            for (int w = 0; w < spec.threads; ++w) {
                long a = w * per, b = std::min(count, a + per);
                if (a >= b) break;
                pool.emplace_back([&, a, b]() {
                    for (long t = a; t < b; ++t) results[t] = run_trial(ctx, lo + t);
                });
            }
            for (auto& th : pool) th.join();
        }
        for (long t = 0; t < count; ++t) {
            const TrialResult& r = results[t];
            ++st.trials_run;
            if (is_error(r.outcome)) ++st.logical_errors;
            if (r.mp_converged) ++mp_converged;
            if (r.post_invoked) {
                ++post_invocations;
                inactivations_sum += r.inactivations;
            }
            if (spec.max_logical_errors > 0 && st.logical_errors >= spec.max_logical_errors) {
                st.early_stopped = st.trials_run < spec.trials;
                stopped = true;
                break;
            }
        }
    }

    st.ler = static_cast<double>(st.logical_errors) / static_cast<double>(st.trials_run);
    auto [lo_ci, hi_ci] = wilson_interval(st.logical_errors, st.trials_run);
    st.ci_lo = lo_ci;
    st.ci_hi = hi_ci;
    st.post_invocations = post_invocations;
    st.mp_converged_frac = static_cast<double>(mp_converged) / static_cast<double>(st.trials_run);
    st.lambda_ave = spec.post == PostProcess::Si && post_invocations > 0
                        ? static_cast<double>(inactivations_sum) / static_cast<double>(post_invocations)
                        : std::nan("");
    return st;
}

} // namespace

ExperimentResult run_experiment(const CssCode& code, const ExperimentSpec& spec) {
    spec.validate();
    spec.decoder.validate(code.hz.rows());
    ExperimentResult result;
    result.code_name = code.name;
    result.n = code.n;
    result.k = code.k;
    RowSpace hx_space = RowSpace::of(code.hx);
    for (std::size_t i = 0; i < spec.p_values.size(); ++i)
        result.points.push_back(run_point(code, hx_space, spec, i));
    return result;
}

RankHistogram rank_histogram_experiment(const CssCode& code, double p,
                                        const DecoderConfig& decoder, long min_failing,
                                        long max_trials, std::uint64_t seed) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("rank_histogram_experiment: p must be in (0, 1)");
    if (min_failing < 1 || max_trials < 1)
        throw std::invalid_argument("rank_histogram_experiment: trial counts must be positive");
    decoder.validate(code.hz.rows());

    std::vector<std::uint32_t> even_rows;
    for (std::size_t r = 0; r < code.hx.rows(); ++r)
        if (code.hx.row(r).size() % 2 == 0 && !code.hx.row(r).empty())
            even_rows.push_back(static_cast<std::uint32_t>(r));
    if (even_rows.empty())
        throw std::invalid_argument("rank_histogram_experiment: no even-weight X checks to split");

    double eps = marginal_flip_prob(DepolarizingParams::depolarizing(p), PauliBasis::X);
    std::vector<double> priors = a_priori_llrs(code.n, eps, decoder.algorithm);

    RankHistogram hist;
    hist.m_x = code.hx.rows();
    hist.bins.assign((code.hx.rows() + hist.bin_width - 1) / hist.bin_width, 0);

    for (long trial = 0; trial < max_trials && hist.failing_trials < min_failing; ++trial) {
        RngStream rng(seed, 0, static_cast<std::uint64_t>(trial));
        std::uint32_t row = even_rows[rng.next_below(even_rows.size())];
        auto supp = code.hx.row(row);
        std::vector<std::uint32_t> cols(supp.begin(), supp.end());
        for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
            std::size_t j = i + rng.next_below(cols.size() - i);
            std::swap(cols[i], cols[j]);
        }
        BitVec e(code.n);
        for (std::size_t i = 0; i < cols.size() / 2; ++i) e.set(cols[i], true);

        ++hist.trials_run;
        DecodeOutcome out = decode(code.hz, mat_vec(code.hz, e), priors, decoder);
        if (out.converged) continue;
        ++hist.failing_trials;
        std::vector<double> rels(code.hx.rows());
        for (std::size_t r = 0; r < code.hx.rows(); ++r)
            rels[r] = check_reliability(code.hx, r, out.soft);
        ++hist.bins[rank_of_check(row, rels) / hist.bin_width];
    }
    return hist;
}

std::vector<ExperimentResult> sweep(const std::vector<SweepEntry>& entries) {
    if (entries.empty()) throw std::invalid_argument("sweep: no entries");
    for (const auto& e : entries) {
        if (!e.code) throw std::invalid_argument("sweep: null code");
        if (e.spec.p_values != entries[0].spec.p_values)
            throw std::invalid_argument("sweep: entries must share the same p grid");
    }
    std::vector<ExperimentResult> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(run_experiment(*e.code, e.spec));
    return out;
}

namespace {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string csv_header() {
    return "code,n,k,p,eps_x,alg,sched,post,trials,logical_errors,ler,ci_lo,ci_hi,"
           "lambda_ave,mp_converged_frac\n";
}

std::string csv_rows(const ExperimentResult& result, const ExperimentSpec& spec) {
    std::string out;
    for (const auto& pt : result.points) {
        out += result.code_name + ',' + std::to_string(result.n) + ',' + std::to_string(result.k) +
               ',' + fmt_double(pt.p) + ',' + fmt_double(pt.eps) + ',' +
               algorithm_name(spec.decoder.algorithm) + ',' + schedule_name(spec.decoder.schedule) +
               ',' + post_name(spec.post) + ',' + std::to_string(pt.trials_run) + ',' +
               std::to_string(pt.logical_errors) + ',' + fmt_double(pt.ler) + ',' +
               fmt_double(pt.ci_lo) + ',' + fmt_double(pt.ci_hi) + ',' + fmt_double(pt.lambda_ave) +
               ',' + fmt_double(pt.mp_converged_frac) + '\n';
    }
    return out;
}

std::string summary_json(const ExperimentResult& result, const ExperimentSpec& spec) {
    nlohmann::ordered_json j;
    j["code"] = {{"name", result.code_name}, {"n", result.n}, {"k", result.k}};
    nlohmann::ordered_json cfg;
    cfg["alg"] = algorithm_name(spec.decoder.algorithm);
    if (spec.decoder.algorithm == MpAlgorithm::NormalizedMinSum) cfg["alpha"] = spec.decoder.alpha;
    cfg["sched"] = schedule_name(spec.decoder.schedule);
    cfg["iters"] = spec.decoder.max_iters;
    cfg["post"] = post_name(spec.post);
    if (spec.post == PostProcess::Si) {
        if (spec.si.lambda_frac) cfg["lambda_frac"] = *spec.si.lambda_frac;
        else cfg["lambda_max"] = spec.si.lambda_max;
    }
    cfg["trials"] = spec.trials;
    cfg["seed"] = spec.seed;
    cfg["max_logical_errors"] = spec.max_logical_errors;
    j["config"] = cfg;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& pt : result.points) {
        nlohmann::ordered_json pj;
        pj["p"] = pt.p;
        pj["eps_x"] = pt.eps;
        pj["trials"] = pt.trials_run;
        pj["logical_errors"] = pt.logical_errors;
        pj["ler"] = pt.ler;
        pj["ci_lo"] = pt.ci_lo;
        pj["ci_hi"] = pt.ci_hi;
        if (!std::isnan(pt.lambda_ave)) pj["lambda_ave"] = pt.lambda_ave;
        pj["post_invocations"] = pt.post_invocations;
        pj["mp_converged_frac"] = pt.mp_converged_frac;
        pj["early_stopped"] = pt.early_stopped;
        j["points"].push_back(pj);
    }
    return j.dump(2);
}

void write_outputs(const std::string& out_stem, const ExperimentResult& result,
                   const ExperimentSpec& spec) {
    {
        std::ofstream jf(out_stem + ".json");
        if (!jf) throw std::runtime_error("cannot open " + out_stem + ".json for writing");
        jf << summary_json(result, spec) << '\n';
        if (!jf) throw std::runtime_error("write failed for " + out_stem + ".json");
    }
    std::ofstream cf(out_stem + ".csv");
    if (!cf) throw std::runtime_error("cannot open " + out_stem + ".csv for writing");
    cf << csv_header() << csv_rows(result, spec);
    if (!cf) throw std::runtime_error("write failed for " + out_stem + ".csv");
}

} // namespace qsi
