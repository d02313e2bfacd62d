#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cb6 {

// Packed bit vector. Bit i lives in word i/64 at position i%64.
// Unused tail bits of the last word are kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_u64(uint64_t v, size_t width) {
        BitVec b(width);
        if (width > 0) {
            b.w_[0] = width >= 64 ? v : (v & ((uint64_t(1) << width) - 1));
        }
        return b;
    }

    size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    int get(size_t i) const { return int((w_[i >> 6] >> (i & 63)) & 1); }
    void set(size_t i, int b) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (b)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void push_back(int b) {
        if ((n_ & 63) == 0) w_.push_back(0);
        if (b) w_[n_ >> 6] |= uint64_t(1) << (n_ & 63);
        ++n_;
    }

    uint64_t word(size_t k) const { return w_[k]; }
    uint64_t& word(size_t k) { return w_[k]; }
    size_t word_count() const { return w_.size(); }

    // Width must be <= 64.
    uint64_t to_u64() const { return n_ == 0 ? 0 : w_[0]; }

    BitVec slice(size_t pos, size_t len) const {
        BitVec out(len);
        for (size_t i = 0; i < len; ++i) out.set(i, get(pos + i));
        return out;
    }

    size_t count_ones() const {
        size_t c = 0;
        for (uint64_t w : w_) c += size_t(__builtin_popcountll(w));
        return c;
    }

    void complement() {
        for (auto& w : w_) w = ~w;
        mask_tail();
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    std::string to_string01() const {
        std::string s(n_, '0');
        for (size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

private:
    void mask_tail() {
        if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
    }

    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Number of positions where a and b carry the same bit. Widths must agree.
inline size_t count_equal_bits(const BitVec& a, const BitVec& b) {
    size_t mismatches = 0;
    for (size_t k = 0; k < a.word_count(); ++k)
        mismatches += size_t(__builtin_popcountll(a.word(k) ^ b.word(k)));
    return a.size() - mismatches;
}

} // namespace cb6
