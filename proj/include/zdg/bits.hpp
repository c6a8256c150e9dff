#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace zdg {

// Fixed-size bitset over element ids; used for ideal / annihilator bookkeeping.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }
    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset intersect(const Bitset& o) const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator<(const Bitset& a, const Bitset& b) { return a.w_ < b.w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

inline Bitset bitset_of(int n, const std::vector<int>& members) {
    Bitset b(n);
    for (int m : members) b.set(m);
    return b;
}

} // namespace zdg
