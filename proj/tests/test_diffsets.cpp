#include <doctest.h>

#include <numeric>

#include "homometry/diffsets.hpp"

using namespace homometry;

namespace {

// quadratic reference implementations, kept deliberately naive
DistanceMultiset brute_self(const SubsetMask& a) {
    DistanceMultiset out(a.ring());
    std::vector<int> v = a.indices();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j)
            out.add(cyclic_distance(a.ring(), v[i], v[j]));
    return out;
}

DistanceMultiset brute_cross(const SubsetMask& a, const SubsetMask& b) {
    DistanceMultiset out(a.ring());
    for (int i : a.indices())
        for (int j : b.indices()) out.add(cyclic_distance(a.ring(), i, j));
    return out;
}

}  // namespace

TEST_CASE("cyclic distance folds at N/2") {
    Ring ring(8);
    CHECK(cyclic_distance(ring, 0, 5) == 3);
    CHECK(cyclic_distance(ring, 1, 5) == 4);
    CHECK(cyclic_distance(ring, 5, 1) == 4);
    CHECK(cyclic_distance(ring, 3, 3) == 0);
    CHECK(cyclic_distance(ring, 0, 7) == 1);
    CHECK(cyclic_distance(Ring(7), 0, 4) == 3);
    CHECK_THROWS_AS(cyclic_distance(ring, 0, 8), IndexOutOfRange);
    CHECK_THROWS_AS(cyclic_distance(ring, -1, 0), IndexOutOfRange);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int d = cyclic_distance(ring, i, j);
            CHECK(d == cyclic_distance(ring, j, i));
            CHECK(d >= 0);
            CHECK(d <= 4);
        }
}

TEST_CASE("self-difference fixtures") {
    Ring ring(8);
    SubsetMask b = SubsetMask::from_indices(ring, std::vector<int>{2, 3, 5, 6});
    DistanceMultiset d = self_difference(b);
    CHECK(d.multiplicities() == std::vector<std::int64_t>{4, 2, 1, 2, 1});
    CHECK(to_pretty_string(d) == "{0^4,1^2,2,3^2,4}");
    CHECK(d.total_mass() == 4 + 6);  // |A| + C(|A|,2)
    CHECK(d.multiplicity(0) == 4);

    SubsetMask a = SubsetMask::from_indices(ring, std::vector<int>{0, 1, 4, 7});
    SubsetMask a2 = SubsetMask::from_indices(ring, std::vector<int>{0, 1, 3, 4});
    CHECK(self_difference(a) == self_difference(a2));
    CHECK(self_difference(a) == d);

    CHECK_THROWS_AS(self_difference(SubsetMask::empty(ring)), EmptySetError);
    CHECK(self_difference(SubsetMask::from_indices(ring, std::vector<int>{5}))
              .multiplicities() == std::vector<std::int64_t>{1, 0, 0, 0, 0});
}

TEST_CASE("self-difference agrees with the quadratic reference") {
    for (int n : {1, 2, 3, 5, 6, 8, 9, 12}) {
        Ring ring(n);
        std::uint64_t full = SubsetMask::full_bits(ring);
        for (std::uint64_t bits = 1; bits <= full; ++bits) {
            SubsetMask a(ring, bits);
            CHECK(self_difference(a) == brute_self(a));
        }
    }
}

TEST_CASE("cross-difference fixtures") {
    Ring ring(8);
    auto set = [&](std::vector<int> v) { return SubsetMask::from_indices(ring, v); };
    CHECK(to_pretty_string(cross_difference(set({2, 3}), set({5, 6}))) == "{2,3^2,4}");
    CHECK(to_pretty_string(cross_difference(set({2, 5}), set({6, 7}))) == "{1,2,3,4}");
    CHECK(cross_difference(set({2, 3}), set({5, 6})).total_mass() == 4);

    Ring six(6);
    CHECK(to_pretty_string(cross_difference(SubsetMask::from_indices(six, std::vector<int>{0}),
                                            SubsetMask::from_indices(six, std::vector<int>{3}))) ==
          "{3}");

    CHECK(cross_difference(set({2, 3}), set({5, 6})) ==
          cross_difference(set({5, 6}), set({2, 3})));
    CHECK_THROWS_AS(cross_difference(set({1}), SubsetMask::empty(ring)), EmptySetError);
    CHECK_THROWS_AS(
        cross_difference(set({1}), SubsetMask::from_indices(Ring(9), std::vector<int>{1})),
        RingMismatch);
}

TEST_CASE("cross-difference agrees with the quadratic reference") {
    for (int n : {2, 4, 7, 8}) {
        Ring ring(n);
        std::uint64_t full = SubsetMask::full_bits(ring);
        for (std::uint64_t bits_a = 1; bits_a <= full; bits_a += 3)
            for (std::uint64_t bits_b = 1; bits_b <= full; bits_b += 5) {
                SubsetMask a(ring, bits_a), b(ring, bits_b);
                CHECK(cross_difference(a, b) == brute_cross(a, b));
            }
    }
}

TEST_CASE("directed lag histograms fold into distance multisets") {
    Ring ring(8);
    SubsetMask a = SubsetMask::from_indices(ring, std::vector<int>{0, 1, 4, 7});
    SubsetMask b = SubsetMask::from_indices(ring, std::vector<int>{2, 3, 5, 6});

    std::vector<std::int64_t> ab = directed_lag_histogram(a, b);
    std::vector<std::int64_t> ba = directed_lag_histogram(b, a);
    REQUIRE(ab.size() == 8);
    CHECK(std::accumulate(ab.begin(), ab.end(), std::int64_t{0}) == 16);
    for (int l = 0; l < 8; ++l) {
        CHECK(ab[static_cast<std::size_t>(l)] == ba[static_cast<std::size_t>((8 - l) % 8)]);
        std::int64_t direct = 0;
        for (int u : a.indices())
            for (int v : b.indices())
                if ((v - u + 8) % 8 == l) ++direct;
        CHECK(ab[static_cast<std::size_t>(l)] == direct);
    }

    CHECK(fold_directed(ring, ab) == cross_difference(a, b));
    CHECK_THROWS_AS(fold_directed(ring, std::vector<std::int64_t>{1, 2}), Error);
}
