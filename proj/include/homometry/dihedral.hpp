#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homometry/partition.hpp"
#include "homometry/subset.hpp"

namespace homometry {

// Element of the dihedral group D_2N acting on the ring. Written as a word
// r^shift * s^(reflect): the reflection s(i) = (N - i) mod N applies FIRST,
// then the rotation by `shift`. Generators r = {false,1}, s = {true,0}
// satisfy r^N = s^2 = e and r*s = s*r^(N-1).
struct DihedralElement {
    bool reflect = false;
    int shift = 0;

    friend bool operator==(DihedralElement a, DihedralElement b) {
        return a.reflect == b.reflect && a.shift == b.shift;
    }
    friend bool operator!=(DihedralElement a, DihedralElement b) { return !(a == b); }
    // Witness search order: rotations before reflections, shift ascending.
    friend bool operator<(DihedralElement a, DihedralElement b) {
        if (a.reflect != b.reflect) return !a.reflect;
        return a.shift < b.shift;
    }
};

DihedralElement identity_element();

// All 2N elements in witness order: e, r, .., r^(N-1), s, s*r, .., s*r^(N-1).
std::vector<DihedralElement> all_elements(Ring ring);

// g(i); reflect first, then add shift, reduced mod N.
int apply(DihedralElement g, int i, Ring ring);

// Composition g*h acts as i -> g(h(i)).
DihedralElement compose(DihedralElement g, DihedralElement h, Ring ring);

DihedralElement inverse(DihedralElement g, Ring ring);

// Image { g(i) : i in A }; bijective, so the size is preserved.
SubsetMask apply_subset(DihedralElement g, const SubsetMask& a);

// Blockwise image (g A_1, ..., g A_K); a valid partition again.
OrderedPartition apply_partition(DihedralElement g, const OrderedPartition& p);

// Orbit representative: the image with the smallest mask value over all 2N
// group elements. Constant on orbits, so two subsets are related by some
// dihedral element iff their canonical forms are equal. ("Smallest mask
// value" = smallest integer with bit i weighted 2^i.)
SubsetMask canonical_subset(const SubsetMask& a);

// First sigma (in witness order) with sigma(P_i) = Q_i for every block, or
// nullopt. Same ring and arity required.
std::optional<DihedralElement> equivalent_witness(const OrderedPartition& p,
                                                  const OrderedPartition& q);

inline bool are_equivalent(const OrderedPartition& p, const OrderedPartition& q) {
    return equivalent_witness(p, q).has_value();
}

// Per-block witnesses sigma_i with sigma_i(P_i) = Q_i, each minimal in
// witness order, or nullopt if some block pair is not dihedrally related.
std::optional<std::vector<DihedralElement>> pseudo_equivalent_witness(
    const OrderedPartition& p, const OrderedPartition& q);

inline bool are_pseudo_equivalent(const OrderedPartition& p, const OrderedPartition& q) {
    return pseudo_equivalent_witness(p, q).has_value();
}

// "e", "s", "r^k", or "s·r^k"; the word reads left to right as actions, i.e.
// s·r^k reflects first and then rotates by k, matching apply().
std::string to_string(DihedralElement g);

}  // namespace homometry
