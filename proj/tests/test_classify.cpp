#include <doctest.h>

#include <bit>
#include <vector>

#include "homometry/classify.hpp"
#include "homometry/diffsets.hpp"

using namespace homometry;

namespace {

// all ordered splits of `base` into `k` nonempty blocks; min_size filters to
// blocks of at least that many elements
std::vector<std::vector<SubsetMask>> ordered_splits(const SubsetMask& base, int k,
                                                    int min_size = 1) {
    std::vector<int> items = base.indices();
    int n = static_cast<int>(items.size());
    std::vector<std::vector<SubsetMask>> out;
    std::uint64_t words = 1;
    for (int i = 0; i < n; ++i) words *= static_cast<std::uint64_t>(k);
    for (std::uint64_t word = 0; word < words; ++word) {
        std::vector<std::uint64_t> bits(static_cast<std::size_t>(k), 0);
        std::uint64_t w = word;
        for (int i = 0; i < n; ++i) {
            bits[w % static_cast<std::uint64_t>(k)] |=
                std::uint64_t{1} << items[static_cast<std::size_t>(i)];
            w /= static_cast<std::uint64_t>(k);
        }
        bool ok = true;
        for (std::uint64_t b : bits) ok = ok && std::popcount(b) >= min_size;
        if (!ok) continue;
        std::vector<SubsetMask> blocks;
        for (std::uint64_t b : bits) blocks.emplace_back(base.ring(), b);
        out.push_back(std::move(blocks));
    }
    return out;
}

OrderedPartition with_head(const SubsetMask& head, const std::vector<SubsetMask>& tail) {
    std::vector<SubsetMask> blocks{head};
    blocks.insert(blocks.end(), tail.begin(), tail.end());
    return OrderedPartition::make(head.ring(), blocks);
}

}  // namespace

TEST_CASE("homometric sets fixtures") {
    Ring ring(8);
    auto set = [&](std::vector<int> v) { return SubsetMask::from_indices(ring, v); };
    CHECK(homometric_subsets(set({0, 1, 4, 7}), set({0, 1, 3, 4})));
    CHECK(homometric_subsets(set({2, 3, 5, 6}), set({2, 5, 6, 7})));
    CHECK_FALSE(homometric_subsets(set({2, 3}), set({2, 5})));
    CHECK(homometric_subsets(set({1, 2}), set({5, 6})));
    CHECK_THROWS_AS(
        homometric_subsets(set({1}), SubsetMask::from_indices(Ring(9), std::vector<int>{1})),
        RingMismatch);
}

TEST_CASE("pair taxonomy fixtures") {
    Ring ring(8);
    OrderedPartition base =
        OrderedPartition::from_indices(ring, {{0, 1, 4, 7}, {2, 6}, {3, 5}});

    SUBCASE("equivalent") {
        OrderedPartition shifted =
            OrderedPartition::from_indices(ring, {{1, 2, 5, 0}, {3, 7}, {4, 6}});
        PairTaxonomy tax = classify_pair(base, shifted);
        CHECK(tax.cls == PairClass::EQUIVALENT);
        CHECK(tax.homometric);
    }

    SUBCASE("homometric only") {
        OrderedPartition other =
            OrderedPartition::from_indices(ring, {{0, 1, 3, 4}, {2, 6}, {5, 7}});
        PairTaxonomy tax = classify_pair(base, other);
        CHECK(tax.cls == PairClass::HOMOMETRIC_ONLY);
        CHECK(tax.homometric);
        CHECK_FALSE(are_equivalent(base, other));
        CHECK_FALSE(are_pseudo_equivalent(base, other));
    }

    SUBCASE("pseudo only") {
        OrderedPartition p =
            OrderedPartition::from_indices(ring, {{0, 1, 4}, {7}, {3}, {2, 5, 6}});
        OrderedPartition q =
            OrderedPartition::from_indices(ring, {{0, 1, 4}, {3}, {7}, {2, 5, 6}});
        PairTaxonomy tax = classify_pair(p, q);
        CHECK(tax.cls == PairClass::PSEUDO_ONLY);
        CHECK(tax.homometric);
        CHECK(are_pseudo_equivalent(p, q));
        CHECK_FALSE(are_equivalent(p, q));
    }

    SUBCASE("pseudo-equivalent without homometry classifies as NOT_HOMOMETRIC") {
        Ring seven(7);
        OrderedPartition p =
            OrderedPartition::from_indices(seven, {{0}, {1}, {3}, {2, 4, 5, 6}});
        OrderedPartition q =
            OrderedPartition::from_indices(seven, {{0}, {1}, {5}, {2, 3, 4, 6}});
        CHECK(are_pseudo_equivalent(p, q));
        CHECK_FALSE(homometric_partitions(p, q));
        PairTaxonomy tax = classify_pair(p, q);
        CHECK(tax.cls == PairClass::NOT_HOMOMETRIC);
        CHECK_FALSE(tax.homometric);
    }

    SUBCASE("figure fixture: size-two fragments fail homometry inside matching wholes") {
        auto set = [&](std::vector<int> v) { return SubsetMask::from_indices(ring, v); };
        OrderedPartition left =
            OrderedPartition::from_indices(ring, {{0, 1, 4, 7}, {2, 3}, {5, 6}});
        OrderedPartition right =
            OrderedPartition::from_indices(ring, {{0, 1, 3, 4}, {2, 5}, {6, 7}});
        CHECK_FALSE(homometric_partitions(left, right));
        CHECK_FALSE(homometric_subsets(set({2, 3}), set({2, 5})));
        CHECK(homometric_subsets(set({2, 3, 5, 6}), set({2, 5, 6, 7})));
    }
}

TEST_CASE("to_string names each class") {
    CHECK(to_string(PairClass::EQUIVALENT) == "EQUIVALENT");
    CHECK(to_string(PairClass::PSEUDO_ONLY) == "PSEUDO_ONLY");
    CHECK(to_string(PairClass::HOMOMETRIC_ONLY) == "HOMOMETRIC_ONLY");
    CHECK(to_string(PairClass::NOT_HOMOMETRIC) == "NOT_HOMOMETRIC");
}

TEST_CASE("exactly two split pairs survive the two-fragment grid") {
    Ring ring(8);
    SubsetMask a = SubsetMask::from_indices(ring, std::vector<int>{0, 1, 4, 7});
    SubsetMask a2 = SubsetMask::from_indices(ring, std::vector<int>{0, 1, 3, 4});
    auto left = ordered_splits(complement(a), 2, 2);  // the six half-half splits
    auto right = ordered_splits(complement(a2), 2, 2);
    REQUIRE(left.size() == 6);
    REQUIRE(right.size() == 6);

    int homometric = 0;
    for (const auto& lb : left)
        for (const auto& rb : right) {
            OrderedPartition p = with_head(a, lb);
            OrderedPartition q = with_head(a2, rb);
            if (!homometric_partitions(p, q)) continue;
            ++homometric;
            CHECK_FALSE(are_equivalent(p, q));
            CHECK_FALSE(are_pseudo_equivalent(p, q));
        }
    CHECK(homometric == 2);

    OrderedPartition named_p =
        OrderedPartition::from_indices(ring, {{0, 1, 4, 7}, {2, 6}, {3, 5}});
    OrderedPartition named_q =
        OrderedPartition::from_indices(ring, {{0, 1, 3, 4}, {2, 6}, {5, 7}});
    CHECK(homometric_partitions(named_p, named_q));
}

TEST_CASE("twelve split pairs survive the three-fragment grid") {
    Ring ring(8);
    SubsetMask a = SubsetMask::from_indices(ring, std::vector<int>{0, 1, 4, 7});
    SubsetMask a2 = SubsetMask::from_indices(ring, std::vector<int>{0, 1, 3, 4});
    auto left = ordered_splits(complement(a), 3);
    auto right = ordered_splits(complement(a2), 3);
    REQUIRE(left.size() == 36);
    REQUIRE(right.size() == 36);

    int homometric = 0;
    bool found_named = false;
    OrderedPartition named_p =
        OrderedPartition::from_indices(ring, {{0, 1, 4, 7}, {2, 6}, {5}, {3}});
    OrderedPartition named_q =
        OrderedPartition::from_indices(ring, {{0, 1, 3, 4}, {2, 6}, {7}, {5}});
    for (const auto& lb : left)
        for (const auto& rb : right) {
            OrderedPartition p = with_head(a, lb);
            OrderedPartition q = with_head(a2, rb);
            if (!homometric_partitions(p, q)) continue;
            ++homometric;
            CHECK_FALSE(are_equivalent(p, q));
            if (p == named_p && q == named_q) found_named = true;
        }
    CHECK(homometric == 12);
    CHECK(found_named);
    CHECK(homometric_partitions(named_p, named_q));
    CHECK_FALSE(are_equivalent(named_p, named_q));
}

TEST_CASE("profiles fingerprint homometry exactly") {
    Ring six(6);
    std::vector<OrderedPartition> pop;
    for (std::uint64_t bits = 1; bits < SubsetMask::full_bits(six); ++bits) {
        SubsetMask a(six, bits);
        pop.push_back(OrderedPartition::make(six, std::vector<SubsetMask>{a, complement(a)}));
    }
    for (std::size_t i = 0; i < pop.size(); ++i)
        for (std::size_t j = i + 1; j < pop.size(); ++j)
            CHECK((homometry_profile(pop[i]) == homometry_profile(pop[j])) ==
                  homometric_partitions(pop[i], pop[j]));
}

TEST_CASE("complement sweep certifies all pairs") {
    VerificationReport small = verify_patterson(Ring(6), VerifyMode::Exhaustive());
    CHECK(small.ok());
    CHECK(small.checked == 1891);  // C(2^6 - 2, 2)
    CHECK(small.theorem == "patterson");
    CHECK(small.mode == "exhaustive");
    CHECK_FALSE(small.k.has_value());

    VerificationReport n8 = verify_patterson(Ring(8), VerifyMode::Exhaustive());
    CHECK(n8.ok());
    CHECK(n8.checked == 32131);  // C(254, 2)

    CHECK_THROWS_AS(verify_patterson(Ring(15), VerifyMode::Exhaustive()), BudgetExceeded);

    VerificationReport sampled = verify_patterson(Ring(20), VerifyMode::Sampled(500, 9));
    CHECK(sampled.ok());
    CHECK(sampled.checked == 500);
    CHECK(sampled.mode == "sampled");
    CHECK(sampled.samples == 500);
    CHECK(sampled.seed == 9);
    VerificationReport again = verify_patterson(Ring(20), VerifyMode::Sampled(500, 9));
    CHECK(again.checked == sampled.checked);
    CHECK(again.violations.size() == sampled.violations.size());
}

TEST_CASE("support and complement homometry decide form equality") {
    for (int n : {2, 5, 8}) {
        VerificationReport r = verify_two_alphabet_theorem(Ring(n), VerifyMode::Exhaustive());
        CHECK(r.ok());
        CHECK(r.theorem == "two-alphabet");
    }
    CHECK_THROWS_AS(verify_two_alphabet_theorem(Ring(13), VerifyMode::Exhaustive()),
                    BudgetExceeded);
    VerificationReport sampled =
        verify_two_alphabet_theorem(Ring(24), VerifyMode::Sampled(300, 4));
    CHECK(sampled.ok());
    CHECK(sampled.checked == 300);
}

TEST_CASE("restricted forms decide full form equality") {
    VerificationReport r = verify_sparse_theorem(Ring(7), 3);
    CHECK(r.ok());
    CHECK(r.k == 3);
    // 1806 onto 3-colourings of 7 points, all pairs certified via grouping
    CHECK(r.checked == std::uint64_t{1806} * 1805 / 2);

    CHECK(verify_sparse_theorem(Ring(6), 4).ok());
    CHECK_THROWS_AS(verify_sparse_theorem(Ring(7), 1), ArityMismatch);
    CHECK_THROWS_AS(verify_sparse_theorem(Ring(5), 6), Error);
    CHECK_THROWS_AS(verify_sparse_theorem(Ring(30), 3), BudgetExceeded);
}

TEST_CASE("bulk-plus-singletons partitions: homometric means equivalent") {
    VerificationReport r = verify_singletons_proposition(Ring(7), 2);
    CHECK(r.ok());
    CHECK(r.checked == std::uint64_t{42} * 41 / 2);  // 7*6 ordered tuples
    CHECK(verify_singletons_proposition(Ring(8), 3).ok());
    CHECK(verify_singletons_proposition(Ring(9), 1).ok());
    CHECK_THROWS_AS(verify_singletons_proposition(Ring(6), 6), Error);
    CHECK_THROWS_AS(verify_singletons_proposition(Ring(10), 8), BudgetExceeded);
}
