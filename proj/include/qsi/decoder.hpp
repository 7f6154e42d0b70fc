#pragma once

#include <cstdint>
#include <vector>

#include "qsi/channel.hpp"
#include "qsi/gf2.hpp"

namespace qsi {

enum class Schedule { Flooding, Serial, Layered };

struct DecoderConfig {
    MpAlgorithm algorithm = MpAlgorithm::MinSum;
    double alpha = 1.0;            // normalization factor, normalized min-sum only
    Schedule schedule = Schedule::Flooding;
    std::vector<std::vector<std::uint32_t>> layers;  // layered schedule: partition of row indices
    int max_iters = 100;
    double clamp = 1e3;            // message and soft output magnitude bound
    bool early_stop = true;        // stop once the hard decision matches the syndrome

    void validate(std::size_t rows) const;
};

struct DecodeOutcome {
    BitVec hard;
    std::vector<double> soft;
    bool converged = false;
    int iterations = 0;
};

/// Syndrome message-passing decoder: finds e with h * e = syndrome.
/// Check updates absorb the syndrome as a sign flip on the check node.
/// One iteration sweeps every layer once; flooding is a single layer,
/// serial is one check per layer in ascending row order.
DecodeOutcome decode(const SparseBitMatrix& h, const BitVec& syndrome,
                     const std::vector<double>& priors, const DecoderConfig& cfg);

/// Bit i is 1 iff soft[i] < 0; ties at zero resolve to 0.
BitVec hard_decision(const std::vector<double>& soft);

bool syndrome_matches(const SparseBitMatrix& h, const BitVec& e, const BitVec& syndrome);

} // namespace qsi
