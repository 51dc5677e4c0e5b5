#pragma once

#include <compare>

#include "homometry/errors.hpp"

namespace homometry {

// The index ring [0, N-1] with wraparound. N >= 1 always; operations that
// represent subsets as single-word bitmasks additionally require N <= 64 and
// enforce that bound at SubsetMask construction.
class Ring {
public:
    explicit Ring(int n) : n_(n) {
        if (n < 1) throw Error("ring size must be >= 1");
    }

    int size() const { return n_; }

    // i mod N mapped into [0, N-1], correct for negative i.
    int reduce(long long i) const {
        long long r = i % n_;
        return static_cast<int>(r < 0 ? r + n_ : r);
    }

    void check_index(int i) const {
        if (i < 0 || i >= n_)
            throw IndexOutOfRange("index " + std::to_string(i) +
                                  " outside ring [0," + std::to_string(n_ - 1) + "]");
    }

    friend bool operator==(Ring a, Ring b) { return a.n_ == b.n_; }
    friend bool operator!=(Ring a, Ring b) { return a.n_ != b.n_; }

private:
    int n_;
};

inline void require_same_ring(Ring a, Ring b) {
    if (a != b)
        throw RingMismatch("ring sizes differ: " + std::to_string(a.size()) +
                           " vs " + std::to_string(b.size()));
}

}  // namespace homometry
