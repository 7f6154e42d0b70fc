#include "qsi/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsi {

void DecoderConfig::validate(std::size_t rows) const {
    if (max_iters < 1) throw std::invalid_argument("DecoderConfig: max_iters must be at least 1");
    if (!(clamp > 0.0)) throw std::invalid_argument("DecoderConfig: clamp must be positive");
    if (algorithm == MpAlgorithm::NormalizedMinSum && !(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("DecoderConfig: alpha must be in (0, 1]");
    if (schedule == Schedule::Layered) {
        std::vector<char> seen(rows, 0);
        for (const auto& layer : layers) {
            for (auto r : layer) {
                if (r >= rows) throw std::invalid_argument("DecoderConfig: layer row index out of range");
                if (seen[r]) throw std::invalid_argument("DecoderConfig: layers must not repeat a row");
                seen[r] = 1;
            }
        }
        for (std::size_t r = 0; r < rows; ++r)
            if (!seen[r]) throw std::invalid_argument("DecoderConfig: layers must cover every row");
    } else if (!layers.empty()) {
        throw std::invalid_argument("DecoderConfig: layers are only valid with the layered schedule");
    }
}

BitVec hard_decision(const std::vector<double>& soft) {
    BitVec e(soft.size());
    for (std::size_t i = 0; i < soft.size(); ++i)
        if (soft[i] < 0.0) e.set(i, true);
    return e;
}

bool syndrome_matches(const SparseBitMatrix& h, const BitVec& e, const BitVec& syndrome) {
    if (e.size() != h.cols() || syndrome.size() != h.rows())
        throw std::invalid_argument("syndrome_matches: dimension mismatch");
    for (std::size_t r = 0; r < h.rows(); ++r) {
        unsigned parity = 0;
        for (auto c : h.row(r)) parity ^= static_cast<unsigned>(e.get(c));
        if (parity != static_cast<unsigned>(syndrome.get(r))) return false;
    }
    return true;
}

namespace {

constexpr double kTanhClip = 35.0;
constexpr double kProdCeil = 1.0 - 1e-15;

inline double clamp_mag(double v, double bound) {
    return std::clamp(v, -bound, bound);
}

struct Graph {
    // CSR over rows; edges[k] is the bit index, msg[k] the check-to-bit message.
    std::vector<std::size_t> row_ptr;
    std::vector<std::uint32_t> edge_bit;
    std::size_t max_row_deg = 0;

    explicit Graph(const SparseBitMatrix& h) {
        row_ptr.reserve(h.rows() + 1);
        row_ptr.push_back(0);
        edge_bit.reserve(h.nnz());
        for (std::size_t r = 0; r < h.rows(); ++r) {
            auto supp = h.row(r);
            edge_bit.insert(edge_bit.end(), supp.begin(), supp.end());
            row_ptr.push_back(edge_bit.size());
            max_row_deg = std::max(max_row_deg, supp.size());
        }
    }
};

// Check-node update: extrinsic output per edge from the inputs of one
// check, with the syndrome bit folded in as an overall sign.
void check_update(MpAlgorithm alg, double alpha, double clamp, bool syn,
                  const double* in, std::size_t w, double* out,
                  std::vector<double>& scratch) {
    int sign_all = syn ? -1 : 1;
    for (std::size_t j = 0; j < w; ++j)
        if (in[j] < 0.0) sign_all = -sign_all;
    if (alg == MpAlgorithm::SumProduct) {
        // Extrinsic magnitude via running prefix and suffix products of
        // tanh(|in|/2).
        scratch.resize(w);
        for (std::size_t j = 0; j < w; ++j)
            scratch[j] = std::tanh(std::min(std::abs(in[j]), kTanhClip) / 2.0);
        double run = 1.0;
        for (std::size_t j = 0; j < w; ++j) {
            out[j] = run;
            run *= scratch[j];
        }
        run = 1.0;
        for (std::size_t j = w; j-- > 0;) {
            out[j] *= run;
            run *= scratch[j];
        }
        for (std::size_t j = 0; j < w; ++j) {
            double mag = 2.0 * std::atanh(std::min(out[j], kProdCeil));
            int sign = in[j] < 0.0 ? -sign_all : sign_all;
            out[j] = clamp_mag(sign * mag, clamp);
        }
    } else {
        double min1 = HUGE_VAL, min2 = HUGE_VAL;
        std::size_t arg1 = 0;
        for (std::size_t j = 0; j < w; ++j) {
            double a = std::abs(in[j]);
            if (a < min1) {
                min2 = min1;
                min1 = a;
                arg1 = j;
            } else if (a < min2) {
                min2 = a;
            }
        }
        double scale = alg == MpAlgorithm::NormalizedMinSum ? alpha : 1.0;
        for (std::size_t j = 0; j < w; ++j) {
            double mag = (j == arg1 ? min2 : min1) * scale;
            int sign = in[j] < 0.0 ? -sign_all : sign_all;
            out[j] = clamp_mag(sign * mag, clamp);
        }
    }
}

} // namespace

DecodeOutcome decode(const SparseBitMatrix& h, const BitVec& syndrome,
                     const std::vector<double>& priors, const DecoderConfig& cfg) {
    if (syndrome.size() != h.rows())
        throw std::invalid_argument("decode: syndrome length does not match row count");
    if (priors.size() != h.cols())
        throw std::invalid_argument("decode: prior length does not match column count");
    cfg.validate(h.rows());
    for (const auto& p : priors)
        if (std::isnan(p)) throw std::invalid_argument("decode: prior is NaN");

    // Resolve the schedule into layers of rows swept in order.
    std::vector<std::vector<std::uint32_t>> layers;
    if (cfg.schedule == Schedule::Flooding) {
        layers.emplace_back();
        layers[0].resize(h.rows());
        for (std::size_t r = 0; r < h.rows(); ++r) layers[0][r] = static_cast<std::uint32_t>(r);
    } else if (cfg.schedule == Schedule::Serial) {
        for (std::size_t r = 0; r < h.rows(); ++r)
            layers.push_back({static_cast<std::uint32_t>(r)});
    } else {
        layers = cfg.layers;
    }

    Graph g(h);
    std::vector<double> soft(priors);
    std::vector<double> msg(g.edge_bit.size(), 0.0);
    std::vector<double> edge_in(g.edge_bit.size(), 0.0);
    std::vector<double> out_buf(g.max_row_deg), scratch;

    auto finish = [&](bool converged, int iters) {
        DecodeOutcome out;
        out.soft.resize(soft.size());
        for (std::size_t i = 0; i < soft.size(); ++i) out.soft[i] = clamp_mag(soft[i], cfg.clamp);
        out.hard = hard_decision(out.soft);
        out.converged = converged;
        out.iterations = iters;
        return out;
    };

    // An empty check with a nonzero syndrome bit can never be satisfied.
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (h.row(r).empty() && syndrome.get(r)) return finish(false, 0);

    if (cfg.early_stop && syndrome_matches(h, hard_decision(soft), syndrome))
        return finish(true, 0);

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        for (const auto& layer : layers) {
            // Every check in a layer reads the soft values as they stand at
            // layer start, so the inputs for all of the layer's edges are
            // gathered before any update is applied.
            for (auto r : layer)
                for (std::size_t k = g.row_ptr[r]; k < g.row_ptr[r + 1]; ++k)
                    edge_in[k] = soft[g.edge_bit[k]] - msg[k];
            for (auto r : layer) {
                std::size_t begin = g.row_ptr[r], end = g.row_ptr[r + 1];
                std::size_t w = end - begin;
                if (w == 0) continue;
                check_update(cfg.algorithm, cfg.alpha, cfg.clamp, syndrome.get(r),
                             edge_in.data() + begin, w, out_buf.data(), scratch);
                for (std::size_t k = 0; k < w; ++k) {
                    soft[g.edge_bit[begin + k]] += out_buf[k] - msg[begin + k];
                    msg[begin + k] = out_buf[k];
                }
            }
        }
        if (cfg.early_stop || iter == cfg.max_iters) {
            if (syndrome_matches(h, hard_decision(soft), syndrome)) return finish(true, iter);
        }
    }
    return finish(false, cfg.max_iters);
}

} // namespace qsi
