#pragma once

#include <cstdint>
#include <vector>

#include "qsi/bitvec.hpp"

namespace qsi {

/// Depolarizing channel with total error probability p split evenly
/// across X, Y and Z.
struct DepolarizingParams {
    double p = 0.0;
    double px = 0.0, py = 0.0, pz = 0.0;

    static DepolarizingParams depolarizing(double p);
};

enum class PauliBasis { X, Z };

/// Probability that a qubit error flips in the given basis: X and Y
/// errors act in the X basis, Z and Y in the Z basis.
double marginal_flip_prob(const DepolarizingParams& params, PauliBasis basis);

/// Deterministic keyed random stream. The same (seed, stream, substream)
/// triple yields the same sequence on every platform and thread layout.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t s_[4];
};

/// Independent flips with probability eps per bit.
BitVec sample_x_error(std::size_t n, double eps, RngStream& rng);

enum class MpAlgorithm { SumProduct, MinSum, NormalizedMinSum };

/// Channel log-likelihood ratios: ln((1 - eps) / eps) per bit for
/// sum-product, constant 1 for the min-sum variants.
std::vector<double> a_priori_llrs(std::size_t n, double eps, MpAlgorithm alg);

} // namespace qsi
