#include "homometry/partition.hpp"

namespace homometry {

OrderedPartition OrderedPartition::make(Ring ring, std::span<const SubsetMask> blocks) {
    if (blocks.empty()) throw EmptyBlockError("a partition needs at least one block");
    std::uint64_t seen = 0;
    std::vector<SubsetMask> copy;
    copy.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const SubsetMask& b = blocks[i];
        require_same_ring(ring, b.ring());
        if (b.is_empty())
            throw EmptyBlockError("block " + std::to_string(i + 1) + " is empty");
        if (seen & b.bits()) {
            std::uint64_t dup = seen & b.bits();
            throw OverlapError("index " + std::to_string(std::countr_zero(dup)) +
                               " appears in more than one block");
        }
        seen |= b.bits();
        copy.push_back(b);
    }
    if (seen != SubsetMask::full_bits(ring)) {
        std::uint64_t missing = ~seen & SubsetMask::full_bits(ring);
        throw CoverageError("index " + std::to_string(std::countr_zero(missing)) +
                            " is not covered by any block");
    }
    return OrderedPartition(ring, std::move(copy));
}

OrderedPartition OrderedPartition::from_indices(
    Ring ring, const std::vector<std::vector<int>>& blocks) {
    std::vector<SubsetMask> masks;
    masks.reserve(blocks.size());
    for (const auto& b : blocks) masks.push_back(SubsetMask::from_indices(ring, b));
    return make(ring, masks);
}

int OrderedPartition::block_of(int i) const {
    ring_.check_index(i);
    for (int k = 0; k < block_count(); ++k)
        if (blocks_[static_cast<std::size_t>(k)].bits() >> i & 1) return k;
    return -1;  // unreachable: blocks cover the ring
}

}  // namespace homometry
