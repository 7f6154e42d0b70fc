#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsi/channel.hpp"
#include "qsi/css_code.hpp"
#include "qsi/decoder.hpp"
#include "qsi/gf2.hpp"
#include "qsi/si.hpp"

namespace qsi {

enum class PostProcess { None, Si, Osd0 };

std::string algorithm_name(MpAlgorithm a);
std::string schedule_name(Schedule s);
std::string post_name(PostProcess p);
MpAlgorithm parse_algorithm(const std::string& s);
Schedule parse_schedule(const std::string& s);
PostProcess parse_post(const std::string& s);

/// Degeneracy-aware success: the residual e + e_hat must lie in the row
/// space of hx, i.e. act as a product of X stabilizers.
bool is_success(const CssCode& code, const BitVec& e, const BitVec& e_hat);

struct ExperimentSpec {
    std::vector<double> p_values;       // physical depolarizing probabilities
    DecoderConfig decoder;
    PostProcess post = PostProcess::None;
    SiConfig si;
    long trials = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    long max_logical_errors = 100;      // early stop target per point; 0 runs all trials

    void validate() const;
};

enum class TrialOutcome {
    ConvergedSuccess,
    ConvergedLogicalError,
    PostSuccess,
    PostLogicalError,
    Failure,
};

struct TrialResult {
    TrialOutcome outcome = TrialOutcome::Failure;
    int error_weight = 0;
    int mp_iterations = 0;
    bool mp_converged = false;
    bool post_invoked = false;
    int inactivations = 0;
};

/// Per-point context for trial execution. Trials are keyed by
/// (seed, point_index, trial), so any trial can be reproduced alone.
struct TrialContext {
    const CssCode& code;
    const RowSpace& hx_space;
    const ExperimentSpec& spec;
    double eps = 0.0;
    std::vector<double> priors;
    std::uint64_t point_index = 0;
};

TrialResult run_trial(const TrialContext& ctx, long trial);

struct PointStats {
    double p = 0.0;
    double eps = 0.0;
    long trials_run = 0;
    long logical_errors = 0;            // logical errors plus outright failures
    double ler = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0;    // Wilson 95% interval
    double lambda_ave = 0.0;            // mean inactivations when SI ran; NaN if it never did
    long post_invocations = 0;
    double mp_converged_frac = 0.0;
    bool early_stopped = false;
};

struct ExperimentResult {
    std::string code_name;
    std::size_t n = 0, k = 0;
    std::vector<PointStats> points;
};

/// Monte Carlo logical error rate over the spec's p grid. Results are
/// byte-identical for any thread count: trials are aggregated in index
/// order and the early-stop cut depends only on per-trial outcomes.
ExperimentResult run_experiment(const CssCode& code, const ExperimentSpec& spec);

std::pair<double, double> wilson_interval(long successes, long total);

/// Histogram of the reliability rank of a deliberately split X check over
/// decoding failures: each trial flips half the support of a random
/// even-weight X check and decodes. Runs until min_failing failures or
/// max_trials samples.
struct RankHistogram {
    std::size_t bin_width = 5;
    std::vector<long> bins;             // bins[t] counts ranks in [5t, 5t+5)
    long failing_trials = 0;
    long trials_run = 0;
    std::size_t m_x = 0;
};

RankHistogram rank_histogram_experiment(const CssCode& code, double p,
                                        const DecoderConfig& decoder, long min_failing,
                                        long max_trials, std::uint64_t seed);

/// One code and spec per entry, sharing a common p grid.
struct SweepEntry {
    const CssCode* code = nullptr;
    ExperimentSpec spec;
};

std::vector<ExperimentResult> sweep(const std::vector<SweepEntry>& entries);

std::string csv_header();
std::string csv_rows(const ExperimentResult& result, const ExperimentSpec& spec);
std::string summary_json(const ExperimentResult& result, const ExperimentSpec& spec);

/// Writes <out_stem>.json and <out_stem>.csv.
void write_outputs(const std::string& out_stem, const ExperimentResult& result,
                   const ExperimentSpec& spec);

} // namespace qsi
