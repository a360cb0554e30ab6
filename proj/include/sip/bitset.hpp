#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sip {

// Dynamic bitset sized at construction. Vertices are 1-based throughout the
// library, so bit 0 stays clear and set bits range over 1..n.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 64) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    // First set bit, or -1.
    int find_first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }
    // First set bit strictly after i, or -1.
    int find_next(int i) const {
        ++i;
        size_t word = size_t(i) >> 6;
        if (word >= w_.size()) return -1;
        uint64_t x = w_[word] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (x) return int(word * 64 + std::countr_zero(x));
            if (++word >= w_.size()) return -1;
            x = w_[word];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this \ o
    Bitset& andnot(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset minus(Bitset a, const Bitset& b) { return a.andnot(b); }

    bool operator==(const Bitset& o) const { return w_ == o.w_; }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    int count_and(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    // Compare as sorted vertex sequences. Only meaningful between sets of
    // equal cardinality (solver tie-breaking); the set owning the smallest
    // differing element is the smaller one.
    bool lex_less_as_set(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t d = w_[i] ^ o.w_[i];
            if (d) {
                uint64_t low = d & (~d + 1);
                return w_[i] & low;
            }
        }
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = find_first(); v != -1; v = find_next(v)) out.push_back(v);
        return out;
    }

    static Bitset of(int nbits, const std::vector<int>& members) {
        Bitset b(nbits);
        for (int v : members) b.set(v);
        return b;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace sip
