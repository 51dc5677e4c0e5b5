#include "homometry/dihedral.hpp"

namespace homometry {

namespace {

std::uint64_t rotl_n(std::uint64_t bits, int s, int n) {
    s %= n;
    if (s == 0) return bits;
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return ((bits << s) | (bits >> (n - s))) & full;
}

// Image of a mask under s: bit i moves to (N - i) mod N. Reversing the word
// maps i -> 63-i; shifting down aligns to i -> N-1-i; one extra left rotation
// gives N-i mod N.
std::uint64_t reflect_mask(std::uint64_t bits, int n) {
    std::uint64_t v = bits;
    v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
    v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((v & 0x0F0F0F0F0F0F0F0Full) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFull) | ((v & 0x00FF00FF00FF00FFull) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFull) | ((v & 0x0000FFFF0000FFFFull) << 16);
    v = (v >> 32) | (v << 32);
    v >>= 64 - n;
    return rotl_n(v, 1, n);
}

void check_element(DihedralElement g, Ring ring) {
    if (g.shift < 0 || g.shift >= ring.size())
        throw IndexOutOfRange("dihedral shift " + std::to_string(g.shift) +
                              " outside [0," + std::to_string(ring.size() - 1) + "]");
}

}  // namespace

DihedralElement identity_element() { return {false, 0}; }

std::vector<DihedralElement> all_elements(Ring ring) {
    std::vector<DihedralElement> out;
    out.reserve(static_cast<std::size_t>(2 * ring.size()));
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int s = 0; s < ring.size(); ++s)
            out.push_back({reflect != 0, s});
    return out;
}

int apply(DihedralElement g, int i, Ring ring) {
    ring.check_index(i);
    check_element(g, ring);
    if (g.reflect) i = (ring.size() - i) % ring.size();
    return (i + g.shift) % ring.size();
}

DihedralElement compose(DihedralElement g, DihedralElement h, Ring ring) {
    check_element(g, ring);
    check_element(h, ring);
    // As affine maps i -> eps*i + t mod N with eps = -1 for reflections:
    // g(h(i)) has eps = eps_g * eps_h and t = eps_g * t_h + t_g.
    int eps_g = g.reflect ? -1 : 1;
    return {g.reflect != h.reflect, ring.reduce(eps_g * h.shift + g.shift)};
}

DihedralElement inverse(DihedralElement g, Ring ring) {
    check_element(g, ring);
    if (g.reflect) return g;  // reflections are involutions
    return {false, ring.reduce(-g.shift)};
}

SubsetMask apply_subset(DihedralElement g, const SubsetMask& a) {
    Ring ring = a.ring();
    check_element(g, ring);
    std::uint64_t bits = a.bits();
    if (g.reflect) bits = reflect_mask(bits, ring.size());
    return SubsetMask(ring, rotl_n(bits, g.shift, ring.size()));
}

OrderedPartition apply_partition(DihedralElement g, const OrderedPartition& p) {
    std::vector<SubsetMask> blocks;
    blocks.reserve(static_cast<std::size_t>(p.block_count()));
    for (const SubsetMask& b : p.blocks()) blocks.push_back(apply_subset(g, b));
    return OrderedPartition::make(p.ring(), blocks);
}

SubsetMask canonical_subset(const SubsetMask& a) {
    Ring ring = a.ring();
    int n = ring.size();
    std::uint64_t best = a.bits();
    std::uint64_t straight = a.bits();
    std::uint64_t reflected = reflect_mask(a.bits(), n);
    for (int s = 0; s < n; ++s) {
        best = std::min(best, rotl_n(straight, s, n));
        best = std::min(best, rotl_n(reflected, s, n));
    }
    return SubsetMask(ring, best);
}

std::optional<DihedralElement> equivalent_witness(const OrderedPartition& p,
                                                  const OrderedPartition& q) {
    require_same_ring(p.ring(), q.ring());
    require_same_arity(p, q);
    for (DihedralElement g : all_elements(p.ring())) {
        bool all = true;
        for (int i = 0; i < p.block_count() && all; ++i)
            all = apply_subset(g, p.block(i)) == q.block(i);
        if (all) return g;
    }
    return std::nullopt;
}

std::optional<std::vector<DihedralElement>> pseudo_equivalent_witness(
    const OrderedPartition& p, const OrderedPartition& q) {
    require_same_ring(p.ring(), q.ring());
    require_same_arity(p, q);
    std::vector<DihedralElement> witnesses;
    witnesses.reserve(static_cast<std::size_t>(p.block_count()));
    for (int i = 0; i < p.block_count(); ++i) {
        bool found = false;
        for (DihedralElement g : all_elements(p.ring())) {
            if (apply_subset(g, p.block(i)) == q.block(i)) {
                witnesses.push_back(g);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return witnesses;
}

std::string to_string(DihedralElement g) {
    if (!g.reflect) return g.shift == 0 ? "e" : "r^" + std::to_string(g.shift);
    return g.shift == 0 ? "s" : "s·r^" + std::to_string(g.shift);
}

}  // namespace homometry
