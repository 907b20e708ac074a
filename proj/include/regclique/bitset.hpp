#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace regclique {

// Fixed-capacity dynamic bitset used for adjacency rows and vertex sets.
// Word count is ceil(n/64); all operations assume both operands share a size.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool test(int i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) {
            if (w != 0) return true;
        }
        return false;
    }

    bool none() const { return !any(); }

    // popcount(*this & other), no allocation
    int intersection_count(const Bitset& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & other.words_[i]) return true;
        }
        return false;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    Bitset& subtract(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& other) const = default;

    // Index of the first set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur != 0) return (w << 6) + std::countr_zero(cur);
            if (++w >= static_cast<int>(words_.size())) return -1;
            cur = words_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = next(0); v != -1; v = next(v + 1)) out.push_back(v);
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace regclique
