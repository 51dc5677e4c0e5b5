#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "homometry/multiset.hpp"
#include "homometry/subset.hpp"

namespace homometry {

// Cyclic distance min{|i-j|, N-|i-j|}, in [0, floor(N/2)].
int cyclic_distance(Ring ring, int i, int j);

// Multiset { d(i,j) : i <= j in A }, unordered pairs including the diagonal,
// so multiplicity of 0 is |A| and total mass is |A| + C(|A|,2).
// Empty A raises EmptySetError.
DistanceMultiset self_difference(const SubsetMask& a);

// Multiset { d(i,j) : i in A, j in B } over all |A|*|B| ordered pairs.
// Symmetric in its arguments because d is. Empty operands raise EmptySetError.
DistanceMultiset cross_difference(const SubsetMask& a, const SubsetMask& b);

// Directed lag histogram c[l] = #{ (u,v) in A x B : v - u = l (mod N) },
// l = 0..N-1. Row l of the block-pair bookkeeping behind AutocorrForm.
std::vector<std::int64_t> directed_lag_histogram(const SubsetMask& a,
                                                 const SubsetMask& b);

// Folds a directed lag histogram onto cyclic distances:
//   h[0] = c[0]; h[d] = c[d] + c[N-d] for 0 < d < N/2; h[N/2] = c[N/2] (N even).
// Applied to a cross histogram this reproduces cross_difference exactly; on a
// self histogram the off-diagonal entries come out doubled because each
// unordered pair appears in both directions.
DistanceMultiset fold_directed(Ring ring, std::span<const std::int64_t> counts);

}  // namespace homometry
