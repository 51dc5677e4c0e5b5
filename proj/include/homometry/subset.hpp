#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "homometry/ring.hpp"

namespace homometry {

// Subset of the ring stored as a single 64-bit mask, bit i = membership of
// index i. Requires ring size <= 64; bits at or above N are rejected.
class SubsetMask {
public:
    SubsetMask(Ring ring, std::uint64_t bits) : ring_(ring), bits_(bits) {
        if (ring.size() > 64)
            throw Error("subset bitmask supports ring sizes up to 64, got " +
                        std::to_string(ring.size()));
        if (ring.size() < 64 && (bits >> ring.size()) != 0)
            throw IndexOutOfRange("mask has bits outside ring [0," +
                                  std::to_string(ring.size() - 1) + "]");
    }

    static SubsetMask from_indices(Ring ring, std::span<const int> indices) {
        std::uint64_t bits = 0;
        for (int i : indices) {
            ring.check_index(i);
            bits |= std::uint64_t{1} << i;
        }
        return SubsetMask(ring, bits);
    }

    static SubsetMask empty(Ring ring) { return SubsetMask(ring, 0); }
    static SubsetMask full(Ring ring) { return SubsetMask(ring, full_bits(ring)); }

    Ring ring() const { return ring_; }
    std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }

    bool contains(int i) const {
        ring_.check_index(i);
        return (bits_ >> i) & 1;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
        return a.ring_ == b.ring_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const SubsetMask& a, const SubsetMask& b) { return !(a == b); }

    static std::uint64_t full_bits(Ring ring) {
        int n = ring.size();
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

private:
    Ring ring_;
    std::uint64_t bits_;
};

// Set complement within the ring.
inline SubsetMask complement(const SubsetMask& a) {
    return SubsetMask(a.ring(), ~a.bits() & SubsetMask::full_bits(a.ring()));
}

}  // namespace homometry
