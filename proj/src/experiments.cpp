#include "homometry/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <thread>
#include <utility>

#include "homometry/classify.hpp"
#include "homometry/dihedral.hpp"
#include "homometry/rng.hpp"
#include "homometry/spectral.hpp"

namespace homometry {

namespace {

constexpr std::uint64_t kEnumerationBudget = 10'000'000;
// Populations above this cannot be ranked exactly in 64 bits.
constexpr std::uint64_t kRankLimit = std::uint64_t{1} << 62;

// C(n, k) table, clamped at kRankLimit so products stay well defined.
struct BinomialTable {
    std::array<std::array<std::uint64_t, 65>, 65> c{};

    BinomialTable() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                std::uint64_t a = c[n - 1][k - 1];
                std::uint64_t b = k <= n - 1 ? c[n - 1][k] : 0;
                c[n][k] = a >= kRankLimit - b ? kRankLimit : a + b;
            }
        }
    }

    std::uint64_t operator()(int n, int k) const {
        if (k < 0 || k > n || n < 0 || n > 64) return 0;
        return c[n][k];
    }
};

const BinomialTable& binomials() {
    static const BinomialTable table;
    return table;
}

// Multinomial over the tail sizes[from..], clamped at kRankLimit.
std::uint64_t tail_population(const std::vector<int>& sizes, std::size_t from, int remaining) {
    unsigned __int128 total = 1;
    for (std::size_t i = from; i < sizes.size(); ++i) {
        total *= binomials()(remaining, sizes[i]);
        remaining -= sizes[i];
        if (total >= kRankLimit) return kRankLimit;
    }
    return static_cast<std::uint64_t>(total);
}

// Combination of a given rank in ascending-bit-pattern order (colex on the
// sorted position sets), expressed over the compressed positions 0..w-1.
std::uint64_t unrank_combination(int w, int k, std::uint64_t rank) {
    std::uint64_t bits = 0;
    for (int t = k; t >= 1; --t) {
        int c = t - 1;
        while (c + 1 < w && binomials()(c + 1, t) <= rank) ++c;
        rank -= binomials()(c, t);
        bits |= std::uint64_t{1} << c;
    }
    return bits;
}

// Scatters compressed bits onto the set positions of free_mask (ascending).
std::uint64_t expand_bits(std::uint64_t compressed, std::uint64_t free_mask) {
    std::uint64_t out = 0;
    while (compressed != 0) {
        int t = std::countr_zero(compressed);
        compressed &= compressed - 1;
        std::uint64_t m = free_mask;
        for (int step = 0; step < t; ++step) m &= m - 1;
        out |= m & (~m + 1);  // t-th lowest free position
    }
    return out;
}

// Unordered pair index t in [0, C(m,2)) maps to (i, j), i < j, ordered so that
// fixing i and sweeping j is contiguous: t = i*m - i*(i+1)/2 + (j - i - 1).
std::pair<std::uint64_t, std::uint64_t> pair_from_linear(std::uint64_t t, std::uint64_t m) {
    // first index via the triangular-number inverse, then a local correction
    long double approx = (2.0L * static_cast<long double>(m) - 1) / 2.0L;
    long double disc = approx * approx - 2.0L * static_cast<long double>(t);
    std::uint64_t i = static_cast<std::uint64_t>(approx - std::sqrt(disc > 0 ? disc : 0));
    auto row_start = [m](std::uint64_t r) { return r * m - r * (r + 1) / 2; };
    while (i > 0 && row_start(i) > t) --i;
    while (row_start(i + 1) <= t) ++i;
    std::uint64_t j = i + 1 + (t - row_start(i));
    return {i, j};
}

}  // namespace

SizeProfile::SizeProfile(Ring ring, std::vector<int> sizes)
    : ring_(ring), sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw Error("size profile needs at least one block");
    int total = 0;
    for (int s : sizes_) {
        if (s < 1) throw EmptyBlockError("size profile entries must be positive");
        total += s;
    }
    if (total != ring.size()) throw CoverageError("size profile must sum to the ring size");
}

SizeProfile profile_for_n(Ring ring) {
    int n = ring.size();
    if (n < 3) throw Error("three-way split needs N >= 3");
    int q = n / 3;
    int r = n % 3;
    std::vector<int> sizes;
    for (int i = 0; i < 3; ++i) sizes.push_back(i < r ? q + 1 : q);
    return SizeProfile(ring, sizes);
}

std::uint64_t population_size(const SizeProfile& profile) {
    return tail_population(profile.sizes(), 0, profile.ring().size());
}

PartitionEnumerator::PartitionEnumerator(const SizeProfile& profile)
    : profile_(profile), rank_(0), population_(population_size(profile)) {
    if (population_ > kEnumerationBudget)
        throw BudgetExceeded("enumeration population is bounded at 10^7");
}

std::optional<OrderedPartition> PartitionEnumerator::next() {
    if (rank_ >= population_) return std::nullopt;
    return unrank(profile_, rank_++);
}

OrderedPartition PartitionEnumerator::unrank(const SizeProfile& profile, std::uint64_t rank) {
    std::uint64_t population = population_size(profile);
    if (population >= kRankLimit) throw BudgetExceeded("population too large to rank");
    if (rank >= population) throw IndexOutOfRange("rank exceeds population");
    Ring ring = profile.ring();
    const std::vector<int>& sizes = profile.sizes();
    std::uint64_t free_mask = SubsetMask::full_bits(ring);
    int remaining = ring.size();
    std::vector<SubsetMask> blocks;
    blocks.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        remaining -= sizes[i];
        std::uint64_t rest = tail_population(sizes, i + 1, remaining);
        std::uint64_t digit = rank / rest;
        rank %= rest;
        std::uint64_t bits =
            expand_bits(unrank_combination(remaining + sizes[i], sizes[i], digit), free_mask);
        blocks.emplace_back(ring, bits);
        free_mask &= ~bits;
    }
    return OrderedPartition::make(ring, blocks);
}

std::vector<OrderedPartition> enumerate_partitions(const SizeProfile& profile) {
    PartitionEnumerator it(profile);
    std::vector<OrderedPartition> out;
    while (auto p = it.next()) out.push_back(std::move(*p));
    return out;
}

std::vector<OrderedPartition> sample_partitions(const SizeProfile& profile,
                                                std::uint64_t count, std::uint64_t seed) {
    std::uint64_t population = population_size(profile);
    if (count > population)
        throw CountExceedsPopulation("sample size exceeds the population");
    if (count == population) return enumerate_partitions(profile);
    if (population >= kRankLimit) throw BudgetExceeded("population too large to rank");
    Rng rng(seed);
    std::vector<std::uint64_t> ranks = sample_without_replacement(population, count, rng);
    std::vector<OrderedPartition> out;
    out.reserve(ranks.size());
    for (std::uint64_t rank : ranks)
        out.push_back(PartitionEnumerator::unrank(profile, rank));
    return out;
}

ExperimentReport run_table1(const SizeProfile& profile, const Table1Options& options) {
    if (options.workers < 1) throw Error("worker count must be positive");

    ExperimentReport report;
    report.n = profile.ring().size();
    report.sizes = profile.sizes();
    report.population = population_size(profile);

    std::vector<OrderedPartition> population;
    if (options.exhaustive || options.sample_size >= report.population) {
        population = enumerate_partitions(profile);
    } else {
        report.sampled = true;
        report.sample_size = options.sample_size;
        report.seed = options.seed;
        population = sample_partitions(profile, options.sample_size, options.seed);
    }

    std::uint64_t m = population.size();
    std::uint64_t pairs = m < 2 ? 0 : m * (m - 1) / 2;
    report.pairs_checked = pairs;
    if (pairs == 0) return report;

    // Exact per-partition fingerprints: equal profile id <=> homometric.
    // Canonical block masks serve the pseudo-equivalence test; equivalence
    // itself runs the witness loop so the two routes stay independent.
    std::map<std::vector<std::int64_t>, int> profile_ids;
    std::vector<int> fp(m);
    std::vector<std::vector<std::uint64_t>> canon(m);
    Ring ring = profile.ring();
    for (std::uint64_t i = 0; i < m; ++i) {
        auto [it, inserted] = profile_ids.emplace(homometry_profile(population[i]),
                                                  static_cast<int>(profile_ids.size()));
        fp[i] = it->second;
        canon[i].reserve(profile.sizes().size());
        for (const SubsetMask& b : population[i].blocks())
            canon[i].push_back(canonical_subset(b).bits());
    }

    struct Tally {
        std::uint64_t equivalent = 0, pseudo_only = 0, homometric_only = 0;
    };
    int workers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(options.workers), pairs));
    std::vector<Tally> tallies(static_cast<std::size_t>(workers));
    std::atomic<bool> inconsistent{false};

    auto scan_range = [&](std::uint64_t begin, std::uint64_t end, Tally& tally) {
        auto [i, j] = pair_from_linear(begin, m);
        for (std::uint64_t t = begin; t < end; ++t) {
            const OrderedPartition& p = population[i];
            const OrderedPartition& q = population[j];
            bool hom = fp[i] == fp[j];
            if (hom) {
                if (are_equivalent(p, q))
                    ++tally.equivalent;
                else if (canon[i] == canon[j])
                    ++tally.pseudo_only;
                else
                    ++tally.homometric_only;
            }
            // spot-check roughly 1% of pairs end to end: the interned profile,
            // the multiset route, and the coefficient-form route must agree
            if (t % 101 == 0) {
                bool slow = homometric_partitions(p, q);
                bool form = forms_equal(AutocorrForm(p), AutocorrForm(q));
                if (slow != hom || form != hom) inconsistent.store(true);
            }
            if (++j == m) {
                ++i;
                j = i + 1;
            }
        }
    };

    if (workers == 1) {
        scan_range(0, pairs, tallies[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            std::uint64_t begin = pairs * static_cast<std::uint64_t>(w) /
                                  static_cast<std::uint64_t>(workers);
            std::uint64_t end = pairs * static_cast<std::uint64_t>(w + 1) /
                                static_cast<std::uint64_t>(workers);
            pool.emplace_back(scan_range, begin, end,
                              std::ref(tallies[static_cast<std::size_t>(w)]));
        }
        for (std::thread& th : pool) th.join();
    }
    if (inconsistent.load()) throw Error("internal inconsistency between homometry routes");

    for (const Tally& tally : tallies) {
        report.equivalent += tally.equivalent;
        report.pseudo_only += tally.pseudo_only;
        report.homometric_only += tally.homometric_only;
    }
    return report;
}

}  // namespace homometry
