#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homometry/ring.hpp"

namespace homometry {

// Multiset of cyclic distances, stored as a dense multiplicity vector indexed
// by distance d = 0 .. floor(N/2). Dense storage gives O(1) multiplicity
// lookup and O(N) equality.
class DistanceMultiset {
public:
    explicit DistanceMultiset(Ring ring)
        : ring_(ring), mult_(static_cast<std::size_t>(ring.size() / 2 + 1), 0) {}

    DistanceMultiset(Ring ring, std::vector<std::int64_t> mult)
        : ring_(ring), mult_(std::move(mult)) {
        if (mult_.size() != static_cast<std::size_t>(ring.size() / 2 + 1))
            throw Error("multiplicity vector must have floor(N/2)+1 entries");
        for (std::int64_t m : mult_)
            if (m < 0) throw Error("multiplicities must be nonnegative");
    }

    static DistanceMultiset zero(Ring ring) { return DistanceMultiset(ring); }

    Ring ring() const { return ring_; }
    int max_distance() const { return ring_.size() / 2; }

    std::int64_t multiplicity(int d) const {
        if (d < 0 || d > max_distance())
            throw IndexOutOfRange("distance " + std::to_string(d) + " outside [0," +
                                  std::to_string(max_distance()) + "]");
        return mult_[static_cast<std::size_t>(d)];
    }

    void add(int d, std::int64_t count = 1) {
        if (d < 0 || d > max_distance())
            throw IndexOutOfRange("distance " + std::to_string(d) + " outside [0," +
                                  std::to_string(max_distance()) + "]");
        mult_[static_cast<std::size_t>(d)] += count;
    }

    std::int64_t total_mass() const {
        std::int64_t t = 0;
        for (std::int64_t m : mult_) t += m;
        return t;
    }

    const std::vector<std::int64_t>& multiplicities() const { return mult_; }

    friend bool operator==(const DistanceMultiset& a, const DistanceMultiset& b) {
        return a.ring_ == b.ring_ && a.mult_ == b.mult_;
    }
    friend bool operator!=(const DistanceMultiset& a, const DistanceMultiset& b) {
        return !(a == b);
    }

private:
    Ring ring_;
    std::vector<std::int64_t> mult_;
};

// Pointwise sum. The ring is explicit so the empty sum is well-defined (it is
// the zero multiset on that ring). Mixed rings raise RingMismatch.
DistanceMultiset multiset_sum(Ring ring, std::span<const DistanceMultiset> parts);

// Renders "{0^4,1^2,2,3^2,4}": distances with multiplicity 1 print bare,
// higher multiplicities print as d^m, zero multiplicities are omitted.
std::string to_pretty_string(const DistanceMultiset& m);

}  // namespace homometry
