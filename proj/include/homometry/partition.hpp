#pragma once

#include <span>
#include <vector>

#include "homometry/subset.hpp"

namespace homometry {

// Ordered partition of the full ring into K nonempty, pairwise disjoint
// blocks. Block order is semantically meaningful and is preserved as given.
class OrderedPartition {
public:
    // Validates: nonempty block list, no empty block (EmptyBlockError),
    // pairwise disjoint (OverlapError), union covers the ring (CoverageError).
    static OrderedPartition make(Ring ring, std::span<const SubsetMask> blocks);

    static OrderedPartition from_indices(Ring ring,
                                         const std::vector<std::vector<int>>& blocks);

    Ring ring() const { return ring_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const SubsetMask& block(int i) const {
        if (i < 0 || i >= block_count())
            throw IndexOutOfRange("block " + std::to_string(i) + " outside [0," +
                                  std::to_string(block_count()) + ")");
        return blocks_[static_cast<std::size_t>(i)];
    }
    const std::vector<SubsetMask>& blocks() const { return blocks_; }

    // Index of the block containing i; every i belongs to exactly one block.
    int block_of(int i) const;

    friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
        return a.ring_ == b.ring_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const OrderedPartition& a, const OrderedPartition& b) {
        return !(a == b);
    }

private:
    OrderedPartition(Ring ring, std::vector<SubsetMask> blocks)
        : ring_(ring), blocks_(std::move(blocks)) {}

    Ring ring_;
    std::vector<SubsetMask> blocks_;
};

inline void require_same_arity(const OrderedPartition& p, const OrderedPartition& q) {
    if (p.block_count() != q.block_count())
        throw ArityMismatch("partitions have different block counts: " +
                            std::to_string(p.block_count()) + " vs " +
                            std::to_string(q.block_count()));
}

}  // namespace homometry
