#include "homometry/classify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <utility>

#include "homometry/diffsets.hpp"
#include "homometry/rng.hpp"
#include "homometry/spectral.hpp"

namespace homometry {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

// Dense ids for multiset/coefficient keys; equal id <=> equal key, no hashing
// involved, insertion order deterministic.
class Interner {
public:
    int intern(std::vector<std::int64_t> key) {
        auto [it, inserted] = ids_.emplace(std::move(key), static_cast<int>(ids_.size()));
        return it->second;
    }

private:
    std::map<std::vector<std::int64_t>, int> ids_;
};

std::vector<std::int64_t> flat_profile(const OrderedPartition& p) {
    std::vector<std::int64_t> out;
    int k = p.block_count();
    for (int i = 0; i < k; ++i) {
        DistanceMultiset d = self_difference(p.block(i));
        out.insert(out.end(), d.multiplicities().begin(), d.multiplicities().end());
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            DistanceMultiset d = cross_difference(p.block(i), p.block(j));
            out.insert(out.end(), d.multiplicities().begin(), d.multiplicities().end());
        }
    return out;
}

std::vector<std::vector<int>> block_indices(const OrderedPartition& p) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(p.block_count()));
    for (const SubsetMask& b : p.blocks()) out.push_back(b.indices());
    return out;
}

std::vector<std::vector<int>> single_set(const SubsetMask& a) { return {a.indices()}; }

std::uint64_t pair_count(std::uint64_t m) { return m * (m - 1) / 2; }

// Uniform nonempty proper subset of the ring.
SubsetMask random_proper_subset(Ring ring, Rng& rng) {
    std::uint64_t full = SubsetMask::full_bits(ring);
    for (;;) {
        std::uint64_t bits = rng.next() & full;
        if (bits != 0 && bits != full) return SubsetMask(ring, bits);
    }
}

}  // namespace

std::string to_string(PairClass cls) {
    switch (cls) {
        case PairClass::EQUIVALENT: return "EQUIVALENT";
        case PairClass::PSEUDO_ONLY: return "PSEUDO_ONLY";
        case PairClass::HOMOMETRIC_ONLY: return "HOMOMETRIC_ONLY";
        case PairClass::NOT_HOMOMETRIC: return "NOT_HOMOMETRIC";
    }
    return "NOT_HOMOMETRIC";
}

bool homometric_subsets(const SubsetMask& a, const SubsetMask& b) {
    require_same_ring(a.ring(), b.ring());
    return self_difference(a) == self_difference(b);
}

bool homometric_partitions(const OrderedPartition& p, const OrderedPartition& q) {
    require_same_ring(p.ring(), q.ring());
    require_same_arity(p, q);
    int k = p.block_count();
    for (int i = 0; i < k; ++i)
        if (self_difference(p.block(i)) != self_difference(q.block(i))) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (cross_difference(p.block(i), p.block(j)) !=
                cross_difference(q.block(i), q.block(j)))
                return false;
    return true;
}

PairTaxonomy classify_pair(const OrderedPartition& p, const OrderedPartition& q) {
    if (!homometric_partitions(p, q)) return {false, PairClass::NOT_HOMOMETRIC};
    if (are_equivalent(p, q)) return {true, PairClass::EQUIVALENT};
    if (are_pseudo_equivalent(p, q)) return {true, PairClass::PSEUDO_ONLY};
    return {true, PairClass::HOMOMETRIC_ONLY};
}

// ---------------------------------------------------------------------------

VerificationReport verify_patterson(Ring ring, VerifyMode mode) {
    auto start = Clock::now();
    VerificationReport report;
    report.theorem = "patterson";
    report.n = ring.size();

    if (mode.exhaustive) {
        report.mode = "exhaustive";
        if (ring.size() > 14)
            throw BudgetExceeded("exhaustive complement sweep is bounded at N <= 14");
        std::uint64_t full = SubsetMask::full_bits(ring);
        Interner fingerprints;
        // Group subsets by self-difference fingerprint and check that every
        // group maps into a single complement-fingerprint group and vice
        // versa; that certifies both directions for all pairs at once.
        std::map<int, std::pair<int, std::uint64_t>> forward;   // f -> (g, witness)
        std::map<int, std::pair<int, std::uint64_t>> backward;  // g -> (f, witness)
        std::uint64_t m = 0;
        for (std::uint64_t bits = 1; bits < full; ++bits) {
            ++m;
            SubsetMask a(ring, bits);
            int f = fingerprints.intern(self_difference(a).multiplicities());
            int g = fingerprints.intern(self_difference(complement(a)).multiplicities());
            auto [fit, fnew] = forward.emplace(f, std::make_pair(g, bits));
            if (!fnew && fit->second.first != g)
                report.violations.push_back(
                    {"homometric sets whose complements are not homometric",
                     single_set(SubsetMask(ring, fit->second.second)), single_set(a)});
            auto [git, gnew] = backward.emplace(g, std::make_pair(f, bits));
            if (!gnew && git->second.first != f)
                report.violations.push_back(
                    {"homometric complements of non-homometric sets",
                     single_set(SubsetMask(ring, git->second.second)), single_set(a)});
        }
        report.checked = pair_count(m);
    } else {
        report.mode = "sampled";
        report.samples = mode.samples;
        report.seed = mode.seed;
        Rng rng(mode.seed);
        for (std::uint64_t t = 0; t < mode.samples; ++t) {
            SubsetMask a = random_proper_subset(ring, rng);
            SubsetMask b = random_proper_subset(ring, rng);
            bool direct = homometric_subsets(a, b);
            bool comp = homometric_subsets(complement(a), complement(b));
            if (direct != comp)
                report.violations.push_back(
                    {direct ? "homometric sets whose complements are not homometric"
                            : "homometric complements of non-homometric sets",
                     single_set(a), single_set(b)});
        }
        report.checked = mode.samples;
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_two_alphabet_theorem(Ring ring, VerifyMode mode) {
    auto start = Clock::now();
    VerificationReport report;
    report.theorem = "two-alphabet";
    report.n = ring.size();

    auto partition_of_support = [&](const SubsetMask& a) {
        std::vector<SubsetMask> blocks{a, complement(a)};
        return OrderedPartition::make(ring, blocks);
    };

    if (mode.exhaustive) {
        report.mode = "exhaustive";
        if (ring.size() > 12)
            throw BudgetExceeded("exhaustive two-alphabet sweep is bounded at N <= 12");
        if (ring.size() < 2) throw Error("two-alphabet sweep needs N >= 2");
        std::uint64_t full = SubsetMask::full_bits(ring);
        Interner multisets;
        Interner formkeys;
        Interner profiles;

        struct Row {
            std::uint64_t bits;
            int form, fa, fb, prof;
        };
        std::vector<Row> rows;
        rows.reserve(static_cast<std::size_t>(full - 1));
        for (std::uint64_t bits = 1; bits < full; ++bits) {
            SubsetMask a(ring, bits);
            OrderedPartition p = partition_of_support(a);
            rows.push_back({bits, formkeys.intern(AutocorrForm(p).raw()),
                            multisets.intern(self_difference(a).multiplicities()),
                            multisets.intern(self_difference(complement(a)).multiplicities()),
                            profiles.intern(flat_profile(p))});
        }
        // The four conditions agree on all pairs iff the four groupings are
        // the same set partition of the population: within a form group the
        // other three ids are constant, and within each of the other three
        // groupings the form id is constant.
        auto check_groups = [&](auto key_of, auto other_of, const char* what) {
            std::map<int, std::pair<int, std::uint64_t>> seen;
            for (const Row& row : rows) {
                auto [it, inserted] =
                    seen.emplace(key_of(row), std::make_pair(other_of(row), row.bits));
                if (!inserted && it->second.first != other_of(row))
                    report.violations.push_back(
                        {what, single_set(SubsetMask(ring, it->second.second)),
                         single_set(SubsetMask(ring, row.bits))});
            }
        };
        check_groups([](const Row& r) { return r.form; }, [](const Row& r) { return r.fa; },
                     "equal forms but supports not homometric");
        check_groups([](const Row& r) { return r.form; }, [](const Row& r) { return r.fb; },
                     "equal forms but complements not homometric");
        check_groups([](const Row& r) { return r.form; }, [](const Row& r) { return r.prof; },
                     "equal forms but partitions not homometric");
        check_groups([](const Row& r) { return r.fa; }, [](const Row& r) { return r.form; },
                     "homometric supports but unequal forms");
        check_groups([](const Row& r) { return r.fb; }, [](const Row& r) { return r.form; },
                     "homometric complements but unequal forms");
        check_groups([](const Row& r) { return r.prof; }, [](const Row& r) { return r.form; },
                     "homometric partitions but unequal forms");
        report.checked = pair_count(rows.size());
    } else {
        report.mode = "sampled";
        report.samples = mode.samples;
        report.seed = mode.seed;
        Rng rng(mode.seed);
        for (std::uint64_t t = 0; t < mode.samples; ++t) {
            SubsetMask a = random_proper_subset(ring, rng);
            SubsetMask b = random_proper_subset(ring, rng);
            OrderedPartition p = partition_of_support(a);
            OrderedPartition q = partition_of_support(b);
            bool c1 = forms_equal(AutocorrForm(p), AutocorrForm(q));
            bool c2 = homometric_subsets(a, b);
            bool c3 = homometric_subsets(complement(a), complement(b));
            bool c4 = homometric_partitions(p, q);
            if (c1 != c2 || c2 != c3 || c3 != c4)
                report.violations.push_back(
                    {"conditions diverge: forms=" + std::to_string(c1) +
                         " supports=" + std::to_string(c2) +
                         " complements=" + std::to_string(c3) +
                         " partitions=" + std::to_string(c4),
                     single_set(a), single_set(b)});
        }
        report.checked = mode.samples;
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

// All ordered K-block partitions (every block nonempty, any sizes), streamed
// in ascending order of the base-K assignment word.
template <typename Visit>
void for_each_assignment_partition(Ring ring, int k, Visit&& visit) {
    int n = ring.size();
    double total = std::pow(static_cast<double>(k), n);
    if (k < 1 || total > 1e7)
        throw BudgetExceeded("assignment sweep K^N is bounded at 10^7");
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(k);
    for (std::uint64_t word = 0; word < count; ++word) {
        std::vector<std::uint64_t> bits(static_cast<std::size_t>(k), 0);
        std::uint64_t w = word;
        for (int i = 0; i < n; ++i) {
            bits[static_cast<std::size_t>(w % static_cast<std::uint64_t>(k))] |=
                std::uint64_t{1} << i;
            w /= static_cast<std::uint64_t>(k);
        }
        bool ok = true;
        for (std::uint64_t b : bits) ok = ok && b != 0;
        if (!ok) continue;
        std::vector<SubsetMask> blocks;
        blocks.reserve(static_cast<std::size_t>(k));
        for (std::uint64_t b : bits) blocks.emplace_back(ring, b);
        visit(OrderedPartition::make(ring, blocks));
    }
}

}  // namespace

VerificationReport verify_sparse_theorem(Ring ring, int k) {
    auto start = Clock::now();
    VerificationReport report;
    report.theorem = "sparse";
    report.n = ring.size();
    report.k = k;
    report.mode = "exhaustive";
    if (k < 2) throw ArityMismatch("sparse comparison needs at least two blocks");
    if (k > ring.size()) throw Error("more blocks than ring elements");

    Interner sparse_keys;
    Interner full_keys;
    int n = ring.size();
    // sparse id -> (full id, witness partition); a split group is exactly a
    // pair with equal sparse forms and unequal full forms. The converse
    // direction (full equal => sparse equal) is a sub-vector restriction and
    // cannot fail.
    std::map<int, std::pair<int, std::vector<std::vector<int>>>> groups;
    std::uint64_t m = 0;
    for_each_assignment_partition(ring, k, [&](const OrderedPartition& p) {
        ++m;
        AutocorrForm form(p);
        std::vector<std::int64_t> restricted;
        restricted.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k - 1) *
                           static_cast<std::size_t>(k - 1));
        for (int l = 0; l < n; ++l)
            for (int i = 1; i < k; ++i)
                for (int j = i; j < k; ++j) restricted.push_back(form.coefficient(l, i, j));
        int sid = sparse_keys.intern(std::move(restricted));
        int fid = full_keys.intern(form.raw());
        auto [it, inserted] = groups.emplace(sid, std::make_pair(fid, block_indices(p)));
        if (!inserted && it->second.first != fid)
            report.violations.push_back({"equal sparse forms but unequal full forms",
                                         it->second.second, block_indices(p)});
    });
    report.checked = pair_count(m);
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_singletons_proposition(Ring ring, int k) {
    auto start = Clock::now();
    VerificationReport report;
    report.theorem = "singletons";
    report.n = ring.size();
    report.k = k;
    report.mode = "exhaustive";
    int n = ring.size();
    if (k < 1 || k >= n) throw Error("singleton count must satisfy 1 <= K < N");
    double total = std::pow(static_cast<double>(n), k);
    if (total > 1e7)
        throw BudgetExceeded("singleton sweep N^K is bounded at 10^7");

    // Partitions (ring minus the tuple, {a_1}, ..., {a_K}) over all ordered
    // tuples of distinct indices, in lexicographic tuple order.
    std::vector<OrderedPartition> population;
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    std::uint64_t words = 1;
    for (int i = 0; i < k; ++i) words *= static_cast<std::uint64_t>(n);
    for (std::uint64_t word = 0; word < words; ++word) {
        std::uint64_t w = word;
        std::uint64_t used = 0;
        bool distinct = true;
        for (int i = k - 1; i >= 0; --i) {
            int a = static_cast<int>(w % static_cast<std::uint64_t>(n));
            w /= static_cast<std::uint64_t>(n);
            if (used >> a & 1) distinct = false;
            used |= std::uint64_t{1} << a;
            tuple[static_cast<std::size_t>(i)] = a;
        }
        if (!distinct) continue;
        std::vector<SubsetMask> blocks;
        blocks.reserve(static_cast<std::size_t>(k + 1));
        blocks.emplace_back(ring, SubsetMask::full_bits(ring) & ~used);
        for (int a : tuple) blocks.emplace_back(ring, std::uint64_t{1} << a);
        population.push_back(OrderedPartition::make(ring, blocks));
    }

    Interner profiles;
    Interner canon_keys;
    std::vector<int> prof_ids;
    std::vector<int> canon_ids;
    prof_ids.reserve(population.size());
    canon_ids.reserve(population.size());
    for (const OrderedPartition& p : population) {
        prof_ids.push_back(profiles.intern(flat_profile(p)));
        // whole-partition orbit key: minimal block-mask tuple over the group
        std::vector<std::int64_t> best;
        for (DihedralElement g : all_elements(ring)) {
            std::vector<std::int64_t> img;
            img.reserve(static_cast<std::size_t>(p.block_count()));
            for (const SubsetMask& b : p.blocks())
                img.push_back(static_cast<std::int64_t>(apply_subset(g, b).bits()));
            if (best.empty() || img < best) best = std::move(img);
        }
        canon_ids.push_back(canon_keys.intern(std::move(best)));
    }

    // Homometric pairs live inside profile groups; each must be equivalent
    // (witness loop, independent of the canonical keys). Equivalent pairs in
    // different profile groups would violate the converse; canonical-key
    // groups with mixed profiles detect exactly that.
    std::map<int, std::vector<std::size_t>> by_profile;
    for (std::size_t i = 0; i < population.size(); ++i)
        by_profile[prof_ids[i]].push_back(i);
    for (const auto& [prof, members] : by_profile) {
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (!are_equivalent(population[members[a]], population[members[b]]))
                    report.violations.push_back({"homometric but not equivalent",
                                                 block_indices(population[members[a]]),
                                                 block_indices(population[members[b]])});
    }
    std::map<int, std::pair<int, std::size_t>> by_canon;
    for (std::size_t i = 0; i < population.size(); ++i) {
        auto [it, inserted] = by_canon.emplace(canon_ids[i], std::make_pair(prof_ids[i], i));
        if (!inserted && it->second.first != prof_ids[i])
            report.violations.push_back({"equivalent but not homometric",
                                         block_indices(population[it->second.second]),
                                         block_indices(population[i])});
    }
    report.checked = pair_count(population.size());
    report.elapsed_ms = ms_since(start);
    return report;
}

std::vector<std::int64_t> homometry_profile(const OrderedPartition& p) {
    return flat_profile(p);
}

}  // namespace homometry
