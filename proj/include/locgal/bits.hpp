#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace locgal {

/// Fixed-universe bitset. Used for element subsets, cover families and
/// relation rows; the universe size is set at construction and never changes.
class Bits {
public:
    Bits() = default;
    explicit Bits(uint32_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    uint32_t universe() const { return n_; }

    void set(uint32_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(uint32_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool none() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t w : w_) c += static_cast<uint32_t>(__builtin_popcountll(w));
        return c;
    }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }
    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }

    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    bool operator==(const Bits& o) const { return w_ == o.w_; }
    bool operator!=(const Bits& o) const { return w_ != o.w_; }
    // lexicographic on words, low block first; total order used for
    // deterministic iteration of family sets
    bool operator<(const Bits& o) const {
        for (size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t b = 0; b < w_.size(); ++b) {
            uint64_t w = w_[b];
            while (w) {
                uint32_t i = static_cast<uint32_t>(b * 64 + __builtin_ctzll(w));
                f(i);
                w &= w - 1;
            }
        }
    }
    std::vector<uint32_t> to_vector() const {
        std::vector<uint32_t> v;
        for_each([&](uint32_t i) { v.push_back(i); });
        return v;
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

/// Square boolean matrix stored as one Bits row per index.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(uint32_t n) : n_(n), rows_(n, Bits(n)) {}

    uint32_t size() const { return n_; }
    bool get(uint32_t i, uint32_t j) const { return rows_[i].test(j); }
    void set(uint32_t i, uint32_t j) { rows_[i].set(j); }
    const Bits& row(uint32_t i) const { return rows_[i]; }
    Bits& row(uint32_t i) { return rows_[i]; }

    bool operator==(const BitMatrix& o) const = default;

private:
    uint32_t n_ = 0;
    std::vector<Bits> rows_;
};

} // namespace locgal
