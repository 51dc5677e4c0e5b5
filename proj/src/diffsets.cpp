#include "homometry/diffsets.hpp"

#include <cstdlib>

namespace homometry {

namespace {

// Rotate a width-N mask left by s: member i moves to (i + s) mod N.
std::uint64_t rotl_n(std::uint64_t bits, int s, int n) {
    s %= n;
    if (s == 0) return bits;
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return ((bits << s) | (bits >> (n - s))) & full;
}

}  // namespace

int cyclic_distance(Ring ring, int i, int j) {
    ring.check_index(i);
    ring.check_index(j);
    int gap = std::abs(i - j);
    return std::min(gap, ring.size() - gap);
}

std::vector<std::int64_t> directed_lag_histogram(const SubsetMask& a,
                                                 const SubsetMask& b) {
    require_same_ring(a.ring(), b.ring());
    int n = a.ring().size();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    // u in A with u + l in B  <=>  u in A & (B rotated down by l).
    for (int l = 0; l < n; ++l)
        counts[static_cast<std::size_t>(l)] =
            std::popcount(a.bits() & rotl_n(b.bits(), n - l, n));
    return counts;
}

DistanceMultiset fold_directed(Ring ring, std::span<const std::int64_t> counts) {
    if (counts.size() != static_cast<std::size_t>(ring.size()))
        throw Error("directed histogram must have N entries");
    int n = ring.size();
    DistanceMultiset out(ring);
    out.add(0, counts[0]);
    for (int d = 1; d < n - d; ++d)
        out.add(d, counts[static_cast<std::size_t>(d)] +
                       counts[static_cast<std::size_t>(n - d)]);
    if (n % 2 == 0 && n >= 2) out.add(n / 2, counts[static_cast<std::size_t>(n / 2)]);
    return out;
}

DistanceMultiset self_difference(const SubsetMask& a) {
    if (a.is_empty()) throw EmptySetError("self-difference of the empty set");
    Ring ring = a.ring();
    int n = ring.size();
    DistanceMultiset out(ring);
    out.add(0, a.size());
    // Unordered pairs i < j: the directed histogram counts each once at lag
    // (j-i) and once at lag (i-j), so the fold double-counts; halve it. At
    // lag N/2 both directed copies land on the same bin, same factor.
    auto directed = directed_lag_histogram(a, a);
    for (int d = 1; d <= n / 2; ++d) {
        std::int64_t folded = directed[static_cast<std::size_t>(d)];
        if (d < n - d) folded += directed[static_cast<std::size_t>(n - d)];
        out.add(d, folded / 2);
    }
    return out;
}

DistanceMultiset cross_difference(const SubsetMask& a, const SubsetMask& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.is_empty() || b.is_empty())
        throw EmptySetError("cross-difference with an empty operand");
    return fold_directed(a.ring(), directed_lag_histogram(a, b));
}

}  // namespace homometry
