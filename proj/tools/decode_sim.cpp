#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsi/css_code.hpp"
#include "qsi/sim.hpp"

namespace {

struct RunOptions {
    std::string code;
    std::string p = "0.1";
    std::string alg = "ms";
    double alpha = 1.0;
    std::string sched = "flooding";
    int iters = 100;
    std::string post = "none";
    int lambda_max = 10;
    double lambda_frac = -1.0;   // unset
    long trials = 1000;
    std::uint64_t seed = 0;
    std::string out;
    int threads = 1;
    long max_errors = 100;
};

std::vector<double> parse_p_list(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse p value '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("cannot parse p value '" + tok + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty p list");
    return out;
}

/// --code takes a manifest path, optionally "#name" to pick one entry.
qsi::CssCode load_code_arg(const std::string& arg) {
    std::size_t hash = arg.rfind('#');
    if (hash == std::string::npos) return qsi::load_code(arg);
    return qsi::load_code(arg.substr(0, hash), arg.substr(hash + 1));
}

/// Fills options from a JSON config file; command line flags override.
void apply_config(const std::string& path, RunOptions& o) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("config parse error: ") + ex.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    auto get = [&](const char* key, auto& slot) {
        using T = std::decay_t<decltype(slot)>;
        if (!j.contains(key)) return;
        try {
            slot = j[key].get<T>();
        } catch (const nlohmann::json::exception&) {
            throw std::invalid_argument(std::string("config field '") + key + "' has the wrong type");
        }
    };
    get("code", o.code);
    if (j.contains("p")) {
        if (j["p"].is_array()) {
            std::string s;
            for (const auto& v : j["p"]) {
                if (!s.empty()) s += ',';
                s += nlohmann::json(v).dump();
            }
            o.p = s;
        } else if (j["p"].is_string()) {
            o.p = j["p"].get<std::string>();
        } else {
            o.p = j["p"].dump();
        }
    }
    get("alg", o.alg);
    get("alpha", o.alpha);
    get("sched", o.sched);
    get("iters", o.iters);
    get("post", o.post);
    get("lambda_max", o.lambda_max);
    get("lambda_frac", o.lambda_frac);
    get("trials", o.trials);
    get("seed", o.seed);
    get("out", o.out);
    get("threads", o.threads);
    get("max_errors", o.max_errors);
}

qsi::ExperimentSpec to_spec(const RunOptions& o) {
    qsi::ExperimentSpec spec;
    spec.p_values = parse_p_list(o.p);
    spec.decoder.algorithm = qsi::parse_algorithm(o.alg);
    spec.decoder.alpha = o.alpha;
    spec.decoder.schedule = qsi::parse_schedule(o.sched);
    spec.decoder.max_iters = o.iters;
    spec.post = qsi::parse_post(o.post);
    if (o.lambda_frac >= 0.0) spec.si.lambda_frac = o.lambda_frac;
    spec.si.lambda_max = o.lambda_max;
    spec.trials = o.trials;
    spec.seed = o.seed;
    spec.threads = o.threads;
    spec.max_logical_errors = o.max_errors;
    return spec;
}

int cmd_run(const RunOptions& o) {
    if (o.code.empty()) throw std::invalid_argument("run: --code is required");
    qsi::CssCode code = load_code_arg(o.code);
    qsi::ExperimentSpec spec = to_spec(o);
    qsi::ExperimentResult result = qsi::run_experiment(code, spec);
    for (const auto& pt : result.points) {
        std::cout << code.name << " p=" << pt.p << " ler=" << pt.ler << " (" << pt.logical_errors
                  << '/' << pt.trials_run << " trials)";
        if (!std::isnan(pt.lambda_ave)) std::cout << " lambda_ave=" << pt.lambda_ave;
        std::cout << '\n';
    }
    if (!o.out.empty()) {
        std::filesystem::path stem(o.out);
        if (stem.has_parent_path()) std::filesystem::create_directories(stem.parent_path());
        qsi::write_outputs(o.out, result, spec);
        std::cout << "wrote " << o.out << ".json and " << o.out << ".csv\n";
    }
    return 0;
}

int cmd_rank_hist(const RunOptions& o, long failing, long max_trials) {
    if (o.code.empty()) throw std::invalid_argument("rank-hist: --code is required");
    qsi::CssCode code = load_code_arg(o.code);
    std::vector<double> ps = parse_p_list(o.p);
    if (ps.size() != 1) throw std::invalid_argument("rank-hist: --p takes a single value");
    qsi::DecoderConfig cfg;
    cfg.algorithm = qsi::parse_algorithm(o.alg);
    cfg.alpha = o.alpha;
    cfg.schedule = qsi::parse_schedule(o.sched);
    cfg.max_iters = o.iters;
    qsi::RankHistogram hist =
        qsi::rank_histogram_experiment(code, ps[0], cfg, failing, max_trials, o.seed);
    std::cout << code.name << " p=" << ps[0] << " failing=" << hist.failing_trials << "/"
              << hist.trials_run << " trials\n";
    for (std::size_t t = 0; t < hist.bins.size(); ++t) {
        if (hist.bins[t] == 0) continue;
        std::cout << "rank " << t * hist.bin_width << "-"
                  << std::min((t + 1) * hist.bin_width, hist.m_x) - 1 << ": " << hist.bins[t] << '\n';
    }
    if (!o.out.empty()) {
        std::filesystem::path stem(o.out);
        if (stem.has_parent_path()) std::filesystem::create_directories(stem.parent_path());
        nlohmann::ordered_json j;
        j["code"] = {{"name", code.name}, {"n", code.n}, {"k", code.k}};
        j["p"] = ps[0];
        j["alg"] = o.alg;
        j["sched"] = o.sched;
        j["iters"] = o.iters;
        j["seed"] = o.seed;
        j["m_x"] = hist.m_x;
        j["bin_width"] = hist.bin_width;
        j["bins"] = hist.bins;
        j["failing_trials"] = hist.failing_trials;
        j["trials_run"] = hist.trials_run;
        std::ofstream out(o.out + ".json");
        if (!out) throw std::runtime_error("cannot open " + o.out + ".json for writing");
        out << j.dump(2) << '\n';
        std::cout << "wrote " << o.out << ".json\n";
    }
    return 0;
}

int cmd_report(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    {
        std::error_code ec;
        std::filesystem::directory_iterator it(dir, ec);
        if (ec) throw std::runtime_error("cannot read directory " + dir);
        for (const auto& entry : it)
            if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::string rows;
    for (const auto& f : files) {
        std::ifstream in(f);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception&) {
            std::cerr << "skipping " << f << ": not valid JSON\n";
            continue;
        }
        if (!j.contains("code") || !j.contains("config") || !j.contains("points")) {
            std::cerr << "skipping " << f << ": not an experiment summary\n";
            continue;
        }
        const auto& code = j["code"];
        const auto& cfg = j["config"];
        for (const auto& pt : j["points"]) {
            char buf[64];
            auto num = [&buf](const nlohmann::json& v) -> std::string {
                std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
                return buf;
            };
            rows += code["name"].get<std::string>() + ',' +
                    std::to_string(code["n"].get<long>()) + ',' +
                    std::to_string(code["k"].get<long>()) + ',' + num(pt["p"]) + ',' +
                    num(pt["eps_x"]) + ',' + cfg["alg"].get<std::string>() + ',' +
                    cfg["sched"].get<std::string>() + ',' + cfg["post"].get<std::string>() + ',' +
                    std::to_string(pt["trials"].get<long>()) + ',' +
                    std::to_string(pt["logical_errors"].get<long>()) + ',' + num(pt["ler"]) + ',' +
                    num(pt["ci_lo"]) + ',' + num(pt["ci_hi"]) + ',' +
                    (pt.contains("lambda_ave") ? num(pt["lambda_ave"]) : std::string()) + ',' +
                    num(pt["mp_converged_frac"]) + '\n';
        }
    }
    if (rows.empty()) throw std::runtime_error("no experiment summaries found in " + dir);
    std::cout << qsi::csv_header() << rows;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo decoding simulator for CSS LDPC codes"};
    app.require_subcommand(1);

    RunOptions opt;
    std::string config_path;
    long failing = 500;
    long rank_max_trials = 1000000;

    // The config file is applied before flag parsing so that explicit
    // flags win over config values.
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];

    try {
        if (!config_path.empty()) apply_config(config_path, opt);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file; flags override its values");
        cmd->add_option("--code", opt.code, "code manifest path, optionally path#entry_name");
        cmd->add_option("--alg", opt.alg, "message passing algorithm: sp, ms or nms")
            ->check(CLI::IsMember({"sp", "ms", "nms"}));
        cmd->add_option("--alpha", opt.alpha, "normalization factor for nms");
        cmd->add_option("--sched", opt.sched, "schedule: flooding or serial")
            ->check(CLI::IsMember({"flooding", "serial"}));
        cmd->add_option("--iters", opt.iters, "maximum message passing iterations");
        cmd->add_option("--seed", opt.seed, "base RNG seed");
        cmd->add_option("--out", opt.out, "output path stem");
    };

    CLI::App* run = app.add_subcommand("run", "estimate logical error rates");
    add_common(run);
    run->add_option("--p", opt.p, "comma separated physical error probabilities");
    run->add_option("--post", opt.post, "post-processing: none, si or osd0")
        ->check(CLI::IsMember({"none", "si", "osd0"}));
    run->add_option("--lambda-max", opt.lambda_max, "maximum inactivated checks for si");
    run->add_option("--lambda-frac", opt.lambda_frac,
                    "lambda_max as a fraction of the X check count (overrides --lambda-max)");
    run->add_option("--trials", opt.trials, "Monte Carlo trials per p value");
    run->add_option("--threads", opt.threads, "worker threads");
    run->add_option("--max-errors", opt.max_errors,
                    "stop a point after this many logical errors (0 runs all trials)");

    CLI::App* rank = app.add_subcommand("rank-hist", "reliability rank histogram of split checks");
    add_common(rank);
    rank->add_option("--p", opt.p, "physical error probability");
    rank->add_option("--failing", failing, "failing trials to collect");
    rank->add_option("--trials", rank_max_trials, "maximum trials to sample");

    std::string report_dir;
    CLI::App* report = app.add_subcommand("report", "combine experiment summaries into one table");
    report->add_option("dir", report_dir, "directory of summary JSON files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(opt);
        if (rank->parsed()) return cmd_rank_hist(opt, failing, rank_max_trials);
        return cmd_report(report_dir);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
}
