#include "qsi/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qsi {

DepolarizingParams DepolarizingParams::depolarizing(double p) {
    if (!(p >= 0.0) || !(p < 1.0))
        throw std::invalid_argument("depolarizing: p must be in [0, 1)");
    DepolarizingParams d;
    d.p = p;
    d.px = d.py = d.pz = p / 3.0;
    return d;
}

double marginal_flip_prob(const DepolarizingParams& params, PauliBasis basis) {
    return basis == PauliBasis::X ? params.px + params.py : params.pz + params.py;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
    // Key the xoshiro256** state by chaining splitmix64 over the triple.
    std::uint64_t x = seed;
    (void)splitmix64(x);
    x ^= stream * 0xd1342543de82ef95ull;
    (void)splitmix64(x);
    x ^= substream * 0x2545f4914f6cdd1dull;
    for (auto& s : s_) s = splitmix64(x);
    if (s_[0] == 0 && s_[1] == 0 && s_[2] == 0 && s_[3] == 0) s_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RngStream::next_below: bound must be positive");
    // Rejection from the top keeps the draw unbiased.
    std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

BitVec sample_x_error(std::size_t n, double eps, RngStream& rng) {
    if (!(eps >= 0.0) || !(eps < 1.0))
        throw std::invalid_argument("sample_x_error: eps must be in [0, 1)");
    BitVec e(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next_double() < eps) e.set(i, true);
    return e;
}

std::vector<double> a_priori_llrs(std::size_t n, double eps, MpAlgorithm alg) {
    if (alg == MpAlgorithm::SumProduct) {
        if (!(eps > 0.0) || !(eps < 1.0))
            throw std::invalid_argument("a_priori_llrs: eps must be in (0, 1) for sum-product");
        return std::vector<double>(n, std::log((1.0 - eps) / eps));
    }
    if (!(eps >= 0.0) || !(eps < 1.0))
        throw std::invalid_argument("a_priori_llrs: eps must be in [0, 1)");
    return std::vector<double>(n, 1.0);
}

} // namespace qsi
