#include "homometry/io.hpp"

#include <algorithm>
#include <sstream>

namespace homometry {

namespace {

std::string pair_key(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

ordered_json violations_json(const std::vector<Violation>& violations) {
    ordered_json out = ordered_json::array();
    for (const Violation& v : violations) {
        ordered_json item;
        item["detail"] = v.detail;
        item["p"] = v.p;
        item["q"] = v.q;
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace

ordered_json to_json(const SubsetMask& a) {
    return ordered_json(a.indices());
}

ordered_json to_json(const OrderedPartition& p) {
    ordered_json out = ordered_json::array();
    for (const SubsetMask& b : p.blocks()) out.push_back(to_json(b));
    return out;
}

ordered_json to_json(const DistanceMultiset& m) {
    return ordered_json(m.multiplicities());
}

ordered_json to_json(const AutocorrForm& f) {
    ordered_json out = ordered_json::array();
    int n = f.ring().size();
    int k = f.block_count();
    for (int l = 0; l < n; ++l) {
        ordered_json lag = ordered_json::object();
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j)
                lag[pair_key(i + 1, j + 1)] = f.coefficient(l, i, j);
        out.push_back(std::move(lag));
    }
    return out;
}

SubsetMask subset_from_json(Ring ring, const ordered_json& j) {
    if (!j.is_array()) throw Error("subset JSON must be an index array");
    std::vector<int> indices;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw Error("subset entries must be integers");
        indices.push_back(e.get<int>());
    }
    return SubsetMask::from_indices(ring, indices);
}

OrderedPartition partition_from_json(Ring ring, const ordered_json& j) {
    if (!j.is_array()) throw Error("partition JSON must be an array of index arrays");
    std::vector<SubsetMask> blocks;
    for (const auto& e : j) blocks.push_back(subset_from_json(ring, e));
    return OrderedPartition::make(ring, blocks);
}

DistanceMultiset multiset_from_json(Ring ring, const ordered_json& j) {
    if (!j.is_array()) throw Error("multiset JSON must be a multiplicity array");
    std::vector<std::int64_t> mult;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw Error("multiplicities must be integers");
        mult.push_back(e.get<std::int64_t>());
    }
    return DistanceMultiset(ring, std::move(mult));
}

namespace {

// "(i,j)" with 1-based i <= j; anything else is rejected
std::pair<int, int> parse_pair_key(const std::string& key) {
    if (key.size() < 5 || key.front() != '(' || key.back() != ')')
        throw Error("bad coefficient key: " + key);
    std::size_t comma = key.find(',');
    if (comma == std::string::npos || comma < 2 || comma + 2 > key.size() - 1)
        throw Error("bad coefficient key: " + key);
    int i, j;
    try {
        i = std::stoi(key.substr(1, comma - 1));
        j = std::stoi(key.substr(comma + 1, key.size() - comma - 2));
    } catch (const std::exception&) {
        throw Error("bad coefficient key: " + key);
    }
    if (i < 1 || j < i) throw Error("bad coefficient key: " + key);
    return {i, j};
}

}  // namespace

AutocorrForm form_from_json(Ring ring, const ordered_json& j) {
    int n = ring.size();
    if (!j.is_array() || j.size() != static_cast<std::size_t>(n))
        throw Error("form JSON must be an array with one map per lag");

    struct Entry {
        int lag, i, j;
        std::int64_t c;
    };
    std::vector<Entry> entries;
    int k = 0;
    for (int l = 0; l < n; ++l) {
        const auto& lag = j.at(static_cast<std::size_t>(l));
        if (!lag.is_object()) throw Error("each lag entry must be a map");
        for (const auto& [key, value] : lag.items()) {
            auto [a, b] = parse_pair_key(key);
            if (!value.is_number_integer()) throw Error("coefficients must be integers");
            k = std::max(k, b);
            entries.push_back({l, a - 1, b - 1, value.get<std::int64_t>()});
        }
    }
    if (k < 1) throw Error("form JSON names no letter pairs");

    std::vector<std::int64_t> coeff(static_cast<std::size_t>(n) *
                                        static_cast<std::size_t>(k) *
                                        static_cast<std::size_t>(k),
                                    0);
    auto at = [&](int l, int a, int b) {
        return (static_cast<std::size_t>(l) * static_cast<std::size_t>(k) +
                static_cast<std::size_t>(a)) *
                   static_cast<std::size_t>(k) +
               static_cast<std::size_t>(b);
    };
    for (const Entry& e : entries) {
        coeff[at(e.lag, e.i, e.j)] = e.c;
        coeff[at(e.lag, e.j, e.i)] = e.c;
    }
    return AutocorrForm(ring, k, std::move(coeff));
}

ordered_json to_json(const VerificationReport& report) {
    ordered_json out;
    out["schema"] = kSchemaTag;
    out["theorem"] = report.theorem;
    out["n"] = report.n;
    if (report.k) out["k"] = *report.k;
    out["mode"] = report.mode;
    if (report.samples) out["samples"] = *report.samples;
    if (report.seed) out["seed"] = *report.seed;
    out["checked"] = report.checked;
    out["violations"] = violations_json(report.violations);
    out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

ordered_json to_json(const ExperimentReport& report) {
    ordered_json out;
    out["schema"] = kSchemaTag;
    out["n"] = report.n;
    out["sizes"] = report.sizes;
    out["population"] = report.population;
    out["sampled"] = report.sampled;
    if (report.sample_size) out["sample_size"] = *report.sample_size;
    if (report.seed) out["seed"] = *report.seed;
    out["pairs_checked"] = report.pairs_checked;
    out["equivalent"] = report.equivalent;
    out["pseudo_only"] = report.pseudo_only;
    out["homometric_only"] = report.homometric_only;
    out["total_homometric"] = report.total_homometric();
    return out;
}

std::string table_csv_header() {
    return "N,sizes,equivalent,pseudo_only,homometric_only,total_homometric";
}

std::string table_csv_row(const ExperimentReport& report) {
    std::ostringstream out;
    out << report.n << ',';
    for (std::size_t i = 0; i < report.sizes.size(); ++i) {
        if (i > 0) out << '-';
        out << report.sizes[i];
    }
    out << ',' << report.equivalent << ',' << report.pseudo_only << ','
        << report.homometric_only << ',' << report.total_homometric();
    return out.str();
}

}  // namespace homometry
