#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homometry/dihedral.hpp"
#include "homometry/partition.hpp"

namespace homometry {

// Taxonomy of a partition pair. The classes are disjoint and ordered by
// strength: EQUIVALENT implies homometric; PSEUDO_ONLY means homometric and
// pseudo-equivalent but not equivalent; HOMOMETRIC_ONLY means homometric but
// neither; NOT_HOMOMETRIC covers everything else (including pairs that are
// pseudo-equivalent without being homometric).
enum class PairClass { EQUIVALENT, PSEUDO_ONLY, HOMOMETRIC_ONLY, NOT_HOMOMETRIC };

struct PairTaxonomy {
    bool homometric = false;
    PairClass cls = PairClass::NOT_HOMOMETRIC;
};

std::string to_string(PairClass cls);

// A - A = B - B as multisets.
bool homometric_subsets(const SubsetMask& a, const SubsetMask& b);

// A_i - A_j = B_i - B_j for every i <= j (self and cross multisets alike).
bool homometric_partitions(const OrderedPartition& p, const OrderedPartition& q);

PairTaxonomy classify_pair(const OrderedPartition& p, const OrderedPartition& q);

// Flattened concatenation of all K self-difference and C(K,2) cross-difference
// multiplicity vectors. Two same-arity partitions are homometric iff their
// profiles are equal, so the profile doubles as an exact fingerprint.
std::vector<std::int64_t> homometry_profile(const OrderedPartition& p);

// ---------------------------------------------------------------------------
// Theorem verifiers. Each one checks a statement exhaustively (or on seeded
// random samples), returning the number of pairs certified and every concrete
// counterexample found. Zero violations = the statement held on the range.

struct Violation {
    std::string detail;
    std::vector<std::vector<int>> p;  // offending objects as index lists
    std::vector<std::vector<int>> q;
};

struct VerificationReport {
    std::string theorem;
    int n = 0;
    std::optional<int> k;
    std::string mode;  // "exhaustive" or "sampled"
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::uint64_t checked = 0;
    std::vector<Violation> violations;
    std::int64_t elapsed_ms = 0;

    bool ok() const { return violations.empty(); }
};

struct VerifyMode {
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    static VerifyMode Exhaustive() { return {}; }
    static VerifyMode Sampled(std::uint64_t samples, std::uint64_t seed) {
        return {false, samples, seed};
    }
};

// Complements of homometric sets are homometric, both directions, over all
// pairs of subsets A with 1 <= |A| <= N-1. Exhaustive mode groups subsets by
// their self-difference fingerprint and certifies every pair through the
// grouping; it requires N <= 14. Sampled mode draws subset pairs directly.
VerificationReport verify_patterson(Ring ring, VerifyMode mode);

// For 2-block partitions P = (A, A^c), Q = (B, B^c), the four conditions
//   (i) forms equal, (ii) A ~ B homometric, (iii) A^c ~ B^c homometric,
//   (iv) P ~ Q homometric
// agree on every pair. Exhaustive over all pairs requires N <= 12.
VerificationReport verify_two_alphabet_theorem(Ring ring, VerifyMode mode);

// Sparse forms (first letter pinned to 0) decide full form equality: over all
// ordered K-block partitions, forms_equal_sparse(P,Q) iff forms_equal(P,Q).
// Exhaustive; requires K >= 2 and K^N <= 10^7.
VerificationReport verify_sparse_theorem(Ring ring, int k);

// Partitions shaped (N-K, 1, ..., 1), one bulk block plus K labeled
// singletons, are homometric iff they are equivalent. Exhaustive over all
// ordered K-tuples of distinct singletons; requires K < N and N^K <= 10^7.
VerificationReport verify_singletons_proposition(Ring ring, int k);

}  // namespace homometry
