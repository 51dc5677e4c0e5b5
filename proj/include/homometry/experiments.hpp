#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "homometry/partition.hpp"

namespace homometry {

// Block sizes of an ordered partition: K positive integers summing to N.
class SizeProfile {
public:
    SizeProfile(Ring ring, std::vector<int> sizes);

    Ring ring() const { return ring_; }
    const std::vector<int>& sizes() const { return sizes_; }
    int block_count() const { return static_cast<int>(sizes_.size()); }

private:
    Ring ring_;
    std::vector<int> sizes_;
};

// The balanced three-way split used by the benchmark table: N = q*3 + r maps
// to (q+1) repeated r times followed by q. Examples: 6 -> (2,2,2),
// 7 -> (3,2,2), 13 -> (5,4,4). Requires N >= 3.
SizeProfile profile_for_n(Ring ring);

// Number of ordered partitions with the given block sizes (multinomial).
std::uint64_t population_size(const SizeProfile& profile);

// Streams every ordered partition with the given sizes exactly once, in
// lexicographic order of the block bit-pattern tuple (block 1 pattern most
// significant). Enumeration requires population <= 10^7 (BudgetExceeded).
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(const SizeProfile& profile);

    // Advances to the next partition; returns nullopt when exhausted.
    std::optional<OrderedPartition> next();

    // Partition at a given rank in enumeration order, without streaming.
    static OrderedPartition unrank(const SizeProfile& profile, std::uint64_t rank);

private:
    SizeProfile profile_;
    std::uint64_t rank_;
    std::uint64_t population_;
};

std::vector<OrderedPartition> enumerate_partitions(const SizeProfile& profile);

// Uniform sample of `count` distinct partitions, seeded and reproducible:
// samples ranks without replacement, sorts them, and unranks. count equal to
// the population returns the full enumeration; larger counts raise
// CountExceedsPopulation.
std::vector<OrderedPartition> sample_partitions(const SizeProfile& profile,
                                                std::uint64_t count, std::uint64_t seed);

// One benchmark-table row: all-pairs classification counts over a population.
struct ExperimentReport {
    int n = 0;
    std::vector<int> sizes;
    std::uint64_t population = 0;
    bool sampled = false;
    std::optional<std::uint64_t> sample_size;
    std::optional<std::uint64_t> seed;
    std::uint64_t pairs_checked = 0;
    std::uint64_t equivalent = 0;
    std::uint64_t pseudo_only = 0;
    std::uint64_t homometric_only = 0;

    std::uint64_t total_homometric() const {
        return equivalent + pseudo_only + homometric_only;
    }
};

struct Table1Options {
    bool exhaustive = true;
    std::uint64_t sample_size = 300;
    std::uint64_t seed = 1;
    int workers = 1;
};

// Scans all unordered pairs of distinct partitions in the population (the
// full enumeration, or a seeded sample) and counts EQUIVALENT / PSEUDO_ONLY
// / HOMOMETRIC_ONLY pairs. Deterministic for a fixed seed at any worker
// count: the pair index space is split into contiguous ranges and per-worker
// counters merge by summation.
ExperimentReport run_table1(const SizeProfile& profile, const Table1Options& options);

}  // namespace homometry
