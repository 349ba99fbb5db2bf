#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace flagpoly {

// Dynamic bitset over 64-bit words. This is the workhorse of the clique
// kernel: adjacency rows are Bitset64 and candidate sets are intersected
// word by word.
class Bitset64 {
public:
    Bitset64() = default;

    explicit Bitset64(std::size_t nbits)
        : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size_bits() const { return nbits_; }
    std::size_t word_count() const { return w_.size(); }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    bool test(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t x : w_) c += std::size_t(std::popcount(x));
        return c;
    }

    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset64& operator&=(const Bitset64& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset64& operator|=(const Bitset64& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset64& and_not(const Bitset64& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    // Clears bits 0..i inclusive.
    void clear_through(std::size_t i) {
        std::size_t wi = i >> 6;
        for (std::size_t k = 0; k < wi; ++k) w_[k] = 0;
        std::uint64_t keep_above = ~std::uint64_t(0) << (i & 63);
        keep_above <<= 1; // shift in two steps: (i&63)==63 would UB on <<64
        w_[wi] &= keep_above;
    }

    // Index of the first set bit at position >= from, or -1.
    int next_set(std::size_t from = 0) const {
        if (from >= nbits_) return -1;
        std::size_t wi = from >> 6;
        std::uint64_t word = w_[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (word) return int((wi << 6) + std::size_t(std::countr_zero(word)));
            if (++wi == w_.size()) return -1;
            word = w_[wi];
        }
    }

    bool operator==(const Bitset64& o) const = default;

    std::size_t count_and(const Bitset64& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::size_t(std::popcount(w_[i] & o.w_[i]));
        return c;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace flagpoly
