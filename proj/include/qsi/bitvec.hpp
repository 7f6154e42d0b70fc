#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsi {

/// Fixed-length vector over GF(2), bit-packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_indices(std::size_t n, std::span<const std::uint32_t> ones) {
        BitVec v(n);
        for (auto i : ones) {
            if (i >= n) throw std::invalid_argument("BitVec::from_indices: index out of range");
            v.set(i, true);
        }
        return v;
    }

    static BitVec from_indices(std::size_t n, std::initializer_list<std::uint32_t> ones) {
        return from_indices(n, std::span<const std::uint32_t>(ones.begin(), ones.size()));
    }

    static BitVec from_bits(std::span<const int> bits) {
        BitVec v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != 0 && bits[i] != 1)
                throw std::invalid_argument("BitVec::from_bits: entries must be 0 or 1");
            v.set(i, bits[i] != 0);
        }
        return v;
    }

    static BitVec from_bits(std::initializer_list<int> bits) {
        return from_bits(std::span<const int>(bits.begin(), bits.size()));
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool b) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (b) w_[i >> 6] |= mask;
        else w_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : w_) if (w != 0) return false;
        return true;
    }

    BitVec& operator^=(const BitVec& o) {
        if (o.n_ != n_) throw std::invalid_argument("BitVec: size mismatch in xor");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

    /// Parity of the AND of two vectors, i.e. the GF(2) inner product.
    std::uint64_t dot(const BitVec& o) const {
        if (o.n_ != n_) throw std::invalid_argument("BitVec: size mismatch in dot");
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1u;
    }

    std::vector<std::uint32_t> ones() const {
        std::vector<std::uint32_t> out;
        out.reserve(weight());
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) out.push_back(static_cast<std::uint32_t>(i));
        return out;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace qsi
