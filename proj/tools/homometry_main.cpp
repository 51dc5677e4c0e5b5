// homometry: difference multisets, dihedral classification, benchmark table,
// and theorem verifiers over Z_N, from one binary.
//
// Exit codes: 0 success, 1 a verifier found a violation, 2 usage error.
// stdout carries only data; diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "homometry/classify.hpp"
#include "homometry/diffsets.hpp"
#include "homometry/dihedral.hpp"
#include "homometry/experiments.hpp"
#include "homometry/io.hpp"

namespace {

using namespace homometry;

std::vector<int> parse_indices(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

// Partition literal "0,1,4,7|2,6|3,5": blocks split on '|', indices on ','.
OrderedPartition parse_partition(Ring ring, const std::string& text) {
    std::vector<SubsetMask> blocks;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, '|'))
        blocks.push_back(SubsetMask::from_indices(ring, parse_indices(part)));
    return OrderedPartition::make(ring, blocks);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// --- diffset ---------------------------------------------------------------

int cmd_diffset(int n, const std::vector<std::string>& sets, bool json) {
    Ring ring(n);
    if (sets.empty() || sets.size() > 2)
        throw Error("diffset takes one --set (self) or two (cross)");
    std::vector<SubsetMask> masks;
    for (const std::string& s : sets)
        masks.push_back(SubsetMask::from_indices(ring, parse_indices(s)));
    DistanceMultiset result = masks.size() == 1
                                  ? self_difference(masks[0])
                                  : cross_difference(masks[0], masks[1]);
    if (json) {
        ordered_json out;
        out["schema"] = kSchemaTag;
        out["n"] = n;
        ordered_json sets_json = ordered_json::array();
        for (const SubsetMask& m : masks) sets_json.push_back(to_json(m));
        out["sets"] = std::move(sets_json);
        out["kind"] = masks.size() == 1 ? "self" : "cross";
        out["multiset"] = to_json(result);
        out["pretty"] = to_pretty_string(result);
        emit(out);
    } else {
        std::cout << to_pretty_string(result) << '\n';
    }
    return 0;
}

// --- classify ----------------------------------------------------------------

int cmd_classify(int n, const std::string& p_text, const std::string& q_text, bool json) {
    Ring ring(n);
    OrderedPartition p = parse_partition(ring, p_text);
    OrderedPartition q = parse_partition(ring, q_text);
    require_same_arity(p, q);
    PairTaxonomy tax = classify_pair(p, q);
    std::optional<DihedralElement> sigma = equivalent_witness(p, q);
    std::optional<std::vector<DihedralElement>> sigmas = pseudo_equivalent_witness(p, q);

    if (json) {
        ordered_json out;
        out["schema"] = kSchemaTag;
        out["n"] = n;
        out["p"] = to_json(p);
        out["q"] = to_json(q);
        out["class"] = to_string(tax.cls);
        out["homometric"] = tax.homometric;
        out["equivalent"] = sigma.has_value();
        out["pseudo_equivalent"] = sigmas.has_value();
        if (sigma) out["witness"] = to_string(*sigma);
        if (sigmas) {
            ordered_json ws = ordered_json::array();
            for (DihedralElement g : *sigmas) ws.push_back(to_string(g));
            out["witnesses"] = std::move(ws);
        }
        emit(out);
    } else {
        std::cout << to_string(tax.cls) << '\n';
        std::cout << (tax.homometric ? "homometric" : "not homometric") << ", "
                  << (sigma ? "equivalent" : "not equivalent") << ", "
                  << (sigmas ? "pseudo-equivalent" : "not pseudo-equivalent") << '\n';
        if (sigma) std::cout << "witness: " << to_string(*sigma) << '\n';
        if (sigmas && !sigma) {
            std::cout << "witnesses:";
            for (DihedralElement g : *sigmas) std::cout << ' ' << to_string(g);
            std::cout << '\n';
        }
    }
    return 0;
}

// --- table1 ----------------------------------------------------------------

struct TableArgs {
    int n = 0;
    bool all = false;
    std::string mode;  // "", "exhaustive", "sample"
    std::uint64_t samples = 300;
    std::uint64_t seed = 1;
    int workers = default_workers();
    std::string out_path;
    bool json = false;
};

int cmd_table1(const TableArgs& args) {
    std::vector<int> ns;
    if (args.all)
        for (int n = 6; n <= 13; ++n) ns.push_back(n);
    else if (args.n >= 3)
        ns.push_back(args.n);
    else
        throw Error("table1 needs --n N (N >= 3) or --all");

    std::vector<ExperimentReport> rows;
    for (int n : ns) {
        // published-table modes unless --mode overrides: exhaustive for the
        // two fully enumerable rows, a seeded 300-sample otherwise
        bool exhaustive = args.mode.empty() ? n <= 7 : args.mode == "exhaustive";
        Table1Options options;
        options.exhaustive = exhaustive;
        options.sample_size = args.samples;
        options.seed = args.seed;
        options.workers = args.workers;
        try {
            rows.push_back(run_table1(profile_for_n(Ring(n)), options));
        } catch (const BudgetExceeded& e) {
            std::cerr << "table1: N=" << n << ": " << e.what() << '\n';
        }
    }

    std::ostringstream csv;
    csv << table_csv_header() << '\n';
    for (const ExperimentReport& row : rows) csv << table_csv_row(row) << '\n';

    if (args.json) {
        ordered_json out;
        out["schema"] = kSchemaTag;
        ordered_json rows_json = ordered_json::array();
        for (const ExperimentReport& row : rows) rows_json.push_back(to_json(row));
        out["rows"] = std::move(rows_json);
        emit(out);
    } else {
        std::cout << csv.str();
    }
    if (!args.out_path.empty()) {
        std::ofstream file(args.out_path);
        if (!file) throw Error("cannot write " + args.out_path);
        file << csv.str();
    }
    return 0;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string theorem;
    int n = 0;
    int k = 3;
    std::string mode = "exhaustive";
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& args) {
    Ring ring(args.n);
    VerifyMode mode = args.mode == "sample" ? VerifyMode::Sampled(args.samples, args.seed)
                                            : VerifyMode::Exhaustive();
    VerificationReport report;
    if (args.theorem == "patterson")
        report = verify_patterson(ring, mode);
    else if (args.theorem == "two-alphabet")
        report = verify_two_alphabet_theorem(ring, mode);
    else if (args.theorem == "sparse")
        report = verify_sparse_theorem(ring, args.k);
    else if (args.theorem == "singletons")
        report = verify_singletons_proposition(ring, args.k);
    else
        throw Error("unknown theorem: " + args.theorem);
    emit(to_json(report));
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite difference-multiset and homometry toolkit over Z_N"};
    app.require_subcommand(1);

    // diffset
    int ds_n = 0;
    std::vector<std::string> ds_sets;
    bool ds_json = false;
    CLI::App* diffset = app.add_subcommand(
        "diffset", "difference multiset of one set (self) or two sets (cross)");
    diffset->add_option("--n", ds_n, "ring size N")->required();
    diffset->add_option("--set", ds_sets, "comma-separated indices; repeat for cross")
        ->required();
    diffset->add_flag("--json", ds_json, "emit JSON instead of the pretty multiset");

    // classify
    int cl_n = 0;
    std::string cl_p, cl_q;
    bool cl_json = false;
    CLI::App* classify = app.add_subcommand(
        "classify", "taxonomy of a partition pair (blocks split by '|', e.g. 0,1|2,3)");
    classify->add_option("--n", cl_n, "ring size N")->required();
    classify->add_option("--p", cl_p, "first partition literal")->required();
    classify->add_option("--q", cl_q, "second partition literal")->required();
    classify->add_flag("--json", cl_json, "emit JSON");

    // table1
    TableArgs ta;
    CLI::App* table1 = app.add_subcommand(
        "table1", "all-pairs classification counts over three-block partitions");
    table1->add_option("--n", ta.n, "single ring size");
    table1->add_flag("--all", ta.all, "run N = 6..13 with the published-table modes");
    table1->add_option("--mode", ta.mode, "exhaustive or sample (default: published modes)")
        ->check(CLI::IsMember({"exhaustive", "sample"}));
    table1->add_option("--samples", ta.samples, "sample size (default 300)");
    table1->add_option("--seed", ta.seed, "sampling seed (default 1)");
    table1->add_option("--workers", ta.workers, "scan threads (default: cores)");
    table1->add_option("--out", ta.out_path, "also write the CSV to a file");
    table1->add_flag("--json", ta.json, "emit JSON rows instead of CSV");

    // verify
    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "machine-check a theorem on a range");
    verify->add_option("--theorem", va.theorem,
                       "patterson | two-alphabet | sparse | singletons")
        ->required()
        ->check(CLI::IsMember({"patterson", "two-alphabet", "sparse", "singletons"}));
    verify->add_option("--n", va.n, "ring size N")->required();
    verify->add_option("--k", va.k, "block count budget for sparse/singletons (default 3)");
    verify->add_option("--mode", va.mode, "exhaustive (default) or sample")
        ->check(CLI::IsMember({"exhaustive", "sample"}));
    verify->add_option("--samples", va.samples, "sampled pair count (default 1000)");
    verify->add_option("--seed", va.seed, "sampling seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (diffset->parsed()) return cmd_diffset(ds_n, ds_sets, ds_json);
        if (classify->parsed()) return cmd_classify(cl_n, cl_p, cl_q, cl_json);
        if (table1->parsed()) return cmd_table1(ta);
        if (verify->parsed()) return cmd_verify(va);
    } catch (const Error& e) {
        std::cerr << "homometry: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "homometry: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
