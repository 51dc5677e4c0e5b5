#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "homometry/classify.hpp"
#include "homometry/dihedral.hpp"
#include "homometry/experiments.hpp"

using namespace homometry;

TEST_CASE("size profiles validate and the table split matches the printed column") {
    CHECK(profile_for_n(Ring(6)).sizes() == std::vector<int>{2, 2, 2});
    CHECK(profile_for_n(Ring(7)).sizes() == std::vector<int>{3, 2, 2});
    CHECK(profile_for_n(Ring(8)).sizes() == std::vector<int>{3, 3, 2});
    CHECK(profile_for_n(Ring(9)).sizes() == std::vector<int>{3, 3, 3});
    CHECK(profile_for_n(Ring(13)).sizes() == std::vector<int>{5, 4, 4});
    CHECK(profile_for_n(Ring(14)).sizes() == std::vector<int>{5, 5, 4});
    CHECK_THROWS_AS(profile_for_n(Ring(2)), Error);

    CHECK_THROWS_AS(SizeProfile(Ring(6), {2, 2}), CoverageError);
    CHECK_THROWS_AS(SizeProfile(Ring(6), {6, 0}), EmptyBlockError);
    CHECK_THROWS_AS(SizeProfile(Ring(6), {}), Error);
    CHECK(SizeProfile(Ring(6), {6}).block_count() == 1);
}

TEST_CASE("population sizes are multinomials") {
    CHECK(population_size(SizeProfile(Ring(6), {2, 2, 2})) == 90);
    CHECK(population_size(SizeProfile(Ring(7), {3, 2, 2})) == 210);
    CHECK(population_size(SizeProfile(Ring(8), {3, 3, 2})) == 560);
    CHECK(population_size(SizeProfile(Ring(9), {3, 3, 3})) == 1680);
    CHECK(population_size(SizeProfile(Ring(13), {5, 4, 4})) == 90090);
    CHECK(population_size(SizeProfile(Ring(5), {5})) == 1);
}

TEST_CASE("enumeration is complete, duplicate-free, and ordered") {
    SizeProfile profile(Ring(6), {2, 2, 2});
    std::vector<OrderedPartition> all = enumerate_partitions(profile);
    REQUIRE(all.size() == 90);

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::uint64_t> prev;
    for (const OrderedPartition& p : all) {
        std::vector<std::uint64_t> key;
        for (const SubsetMask& b : p.blocks()) {
            CHECK(b.size() == 2);
            key.push_back(b.bits());
        }
        CHECK(seen.insert(key).second);
        if (!prev.empty()) CHECK(prev < key);  // block-pattern tuples ascend
        prev = key;
    }

    // streaming and ranking agree
    PartitionEnumerator it(profile);
    for (std::uint64_t rank = 0; rank < 90; ++rank) {
        auto p = it.next();
        REQUIRE(p.has_value());
        CHECK(*p == PartitionEnumerator::unrank(profile, rank));
        CHECK(*p == all[rank]);
    }
    CHECK_FALSE(it.next().has_value());
    CHECK_THROWS_AS(PartitionEnumerator::unrank(profile, 90), IndexOutOfRange);

    CHECK_THROWS_AS(enumerate_partitions(SizeProfile(Ring(24), {8, 8, 8})),
                    BudgetExceeded);
}

TEST_CASE("sampling is uniform-without-replacement and seeded") {
    SizeProfile profile(Ring(9), {3, 3, 3});
    std::vector<OrderedPartition> sample = sample_partitions(profile, 300, 1);
    REQUIRE(sample.size() == 300);
    std::set<std::vector<std::uint64_t>> seen;
    for (const OrderedPartition& p : sample) {
        std::vector<std::uint64_t> key;
        for (const SubsetMask& b : p.blocks()) key.push_back(b.bits());
        CHECK(seen.insert(key).second);
    }
    CHECK(sample_partitions(profile, 300, 1) == sample);
    CHECK(sample_partitions(profile, 300, 2) != sample);

    SizeProfile small(Ring(6), {2, 2, 2});
    CHECK(sample_partitions(small, 90, 7) == enumerate_partitions(small));
    CHECK_THROWS_AS(sample_partitions(small, 91, 7), CountExceedsPopulation);
}

TEST_CASE("pair scan reproduces the exact small-ring rows") {
    Table1Options exhaustive;
    exhaustive.exhaustive = true;

    ExperimentReport six = run_table1(profile_for_n(Ring(6)), exhaustive);
    CHECK(six.population == 90);
    CHECK(six.pairs_checked == 4005);
    CHECK(six.equivalent == 369);
    CHECK(six.pseudo_only == 0);
    CHECK(six.homometric_only == 0);
    CHECK(six.total_homometric() == 369);
    CHECK_FALSE(six.sampled);

    ExperimentReport seven = run_table1(profile_for_n(Ring(7)), exhaustive);
    CHECK(seven.equivalent == 1218);
    CHECK(seven.pseudo_only == 0);
    CHECK(seven.total_homometric() == 1218);
}

TEST_CASE("equivalent-pair counts agree with orbit counting") {
    // independent route: group the population into dihedral orbits and sum
    // C(orbit, 2); the scan's witness loop must give the same total
    SizeProfile profile(Ring(6), {2, 2, 2});
    std::vector<OrderedPartition> all = enumerate_partitions(profile);
    std::map<std::vector<std::uint64_t>, std::uint64_t> orbits;
    for (const OrderedPartition& p : all) {
        std::vector<std::uint64_t> best;
        for (DihedralElement g : all_elements(p.ring())) {
            std::vector<std::uint64_t> img;
            for (const SubsetMask& b : p.blocks())
                img.push_back(apply_subset(g, b).bits());
            if (best.empty() || img < best) best = std::move(img);
        }
        ++orbits[best];
    }
    std::uint64_t expected = 0;
    for (const auto& [key, count] : orbits) expected += count * (count - 1) / 2;

    Table1Options options;
    options.exhaustive = true;
    CHECK(run_table1(profile, options).equivalent == expected);
    CHECK(expected == 369);
}

TEST_CASE("worker count never changes the counts") {
    SizeProfile profile(Ring(8), {3, 3, 2});
    Table1Options one;
    one.exhaustive = true;
    one.workers = 1;
    ExperimentReport base = run_table1(profile, one);
    CHECK(base.equivalent == 4008);
    CHECK(base.pseudo_only == 256);
    CHECK(base.homometric_only == 0);

    for (int workers : {2, 3, 5, 16}) {
        Table1Options w = one;
        w.workers = workers;
        ExperimentReport r = run_table1(profile, w);
        CHECK(r.equivalent == base.equivalent);
        CHECK(r.pseudo_only == base.pseudo_only);
        CHECK(r.homometric_only == base.homometric_only);
        CHECK(r.pairs_checked == base.pairs_checked);
    }

    Table1Options sampled;
    sampled.exhaustive = false;
    sampled.sample_size = 120;
    sampled.seed = 3;
    sampled.workers = 1;
    ExperimentReport s1 = run_table1(profile, sampled);
    CHECK(s1.sampled);
    CHECK(s1.sample_size == 120);
    CHECK(s1.seed == 3);
    CHECK(s1.pairs_checked == std::uint64_t{120} * 119 / 2);
    sampled.workers = 4;
    ExperimentReport s4 = run_table1(profile, sampled);
    CHECK(s4.equivalent == s1.equivalent);
    CHECK(s4.pseudo_only == s1.pseudo_only);
    CHECK(s4.homometric_only == s1.homometric_only);
}

TEST_CASE("sampled mode falls back to the full population when it covers it") {
    Table1Options options;
    options.exhaustive = false;
    options.sample_size = 300;
    ExperimentReport r = run_table1(profile_for_n(Ring(6)), options);
    CHECK_FALSE(r.sampled);
    CHECK(r.population == 90);
    CHECK(r.equivalent == 369);
}
