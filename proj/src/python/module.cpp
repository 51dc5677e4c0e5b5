// Python veneer over the C++ core: plain lists/dicts in and out, mirroring
// the CLI's JSON shapes. The C++ types stay internal; errors surface as
// RuntimeError via the std::runtime_error base.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homometry/classify.hpp"
#include "homometry/diffsets.hpp"
#include "homometry/dihedral.hpp"
#include "homometry/experiments.hpp"
#include "homometry/io.hpp"
#include "homometry/spectral.hpp"

namespace py = pybind11;
using namespace homometry;

namespace {

SubsetMask subset_of(Ring ring, const std::vector<int>& indices) {
    return SubsetMask::from_indices(ring, indices);
}

OrderedPartition partition_of(Ring ring, const std::vector<std::vector<int>>& blocks) {
    return OrderedPartition::from_indices(ring, blocks);
}

std::vector<std::vector<int>> partition_out(const OrderedPartition& p) {
    std::vector<std::vector<int>> out;
    for (const SubsetMask& b : p.blocks()) out.push_back(b.indices());
    return out;
}

py::object json_to_py(const ordered_json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "difference multisets, dihedral classification, and homometry checks on Z_N";

    m.def("cyclic_distance",
          [](int n, int i, int j) { return cyclic_distance(Ring(n), i, j); },
          py::arg("n"), py::arg("i"), py::arg("j"));

    m.def("self_difference",
          [](int n, const std::vector<int>& a) {
              return self_difference(subset_of(Ring(n), a)).multiplicities();
          },
          py::arg("n"), py::arg("a"),
          "multiplicity vector of A - A, indexed by distance from 0");

    m.def("cross_difference",
          [](int n, const std::vector<int>& a, const std::vector<int>& b) {
              Ring ring(n);
              return cross_difference(subset_of(ring, a), subset_of(ring, b))
                  .multiplicities();
          },
          py::arg("n"), py::arg("a"), py::arg("b"));

    m.def("complement",
          [](int n, const std::vector<int>& a) {
              return complement(subset_of(Ring(n), a)).indices();
          },
          py::arg("n"), py::arg("a"));

    m.def("canonical_subset",
          [](int n, const std::vector<int>& a) {
              return canonical_subset(subset_of(Ring(n), a)).indices();
          },
          py::arg("n"), py::arg("a"),
          "smallest dihedral image, a full orbit invariant");

    m.def("homometric_sets",
          [](int n, const std::vector<int>& a, const std::vector<int>& b) {
              Ring ring(n);
              return homometric_subsets(subset_of(ring, a), subset_of(ring, b));
          },
          py::arg("n"), py::arg("a"), py::arg("b"));

    m.def("homometric_partitions",
          [](int n, const std::vector<std::vector<int>>& p,
             const std::vector<std::vector<int>>& q) {
              Ring ring(n);
              return homometric_partitions(partition_of(ring, p), partition_of(ring, q));
          },
          py::arg("n"), py::arg("p"), py::arg("q"));

    m.def("classify_pair",
          [](int n, const std::vector<std::vector<int>>& p,
             const std::vector<std::vector<int>>& q) {
              Ring ring(n);
              PairTaxonomy tax = classify_pair(partition_of(ring, p), partition_of(ring, q));
              py::dict out;
              out["class"] = to_string(tax.cls);
              out["homometric"] = tax.homometric;
              return out;
          },
          py::arg("n"), py::arg("p"), py::arg("q"));

    m.def("equivalent_witness",
          [](int n, const std::vector<std::vector<int>>& p,
             const std::vector<std::vector<int>>& q) -> py::object {
              Ring ring(n);
              auto w = equivalent_witness(partition_of(ring, p), partition_of(ring, q));
              if (!w) return py::none();
              return py::str(to_string(*w));
          },
          py::arg("n"), py::arg("p"), py::arg("q"));

    m.def("pseudo_equivalent_witness",
          [](int n, const std::vector<std::vector<int>>& p,
             const std::vector<std::vector<int>>& q) -> py::object {
              Ring ring(n);
              auto ws = pseudo_equivalent_witness(partition_of(ring, p), partition_of(ring, q));
              if (!ws) return py::none();
              py::list out;
              for (DihedralElement g : *ws) out.append(to_string(g));
              return out;
          },
          py::arg("n"), py::arg("p"), py::arg("q"));

    m.def("autocorrelation",
          [](const std::vector<double>& values) {
              Ring ring(static_cast<int>(values.size()));
              return autocorrelation(Signal(ring, values));
          },
          py::arg("values"));

    m.def("power_spectrum",
          [](const std::vector<double>& values) {
              Ring ring(static_cast<int>(values.size()));
              return power_spectrum(Signal(ring, values));
          },
          py::arg("values"));

    m.def("autocorr_form",
          [](int n, const std::vector<std::vector<int>>& p) {
              return json_to_py(to_json(AutocorrForm(partition_of(Ring(n), p))));
          },
          py::arg("n"), py::arg("p"),
          "per-lag letter-pair coefficient maps, 1-based keys \"(i,j)\"");

    m.def("form_evaluate",
          [](int n, const std::vector<std::vector<int>>& p,
             const std::vector<double>& letters) {
              return AutocorrForm(partition_of(Ring(n), p)).evaluate(Alphabet(letters));
          },
          py::arg("n"), py::arg("p"), py::arg("letters"));

    m.def("forms_equal",
          [](int n, const std::vector<std::vector<int>>& p,
             const std::vector<std::vector<int>>& q) {
              Ring ring(n);
              return forms_equal(AutocorrForm(partition_of(ring, p)),
                                 AutocorrForm(partition_of(ring, q)));
          },
          py::arg("n"), py::arg("p"), py::arg("q"));

    m.def("forms_equal_sparse",
          [](int n, const std::vector<std::vector<int>>& p,
             const std::vector<std::vector<int>>& q) {
              Ring ring(n);
              return forms_equal_sparse(AutocorrForm(partition_of(ring, p)),
                                        AutocorrForm(partition_of(ring, q)));
          },
          py::arg("n"), py::arg("p"), py::arg("q"));

    m.def("profile_for_n",
          [](int n) { return profile_for_n(Ring(n)).sizes(); }, py::arg("n"));

    m.def("enumerate_partitions",
          [](int n, const std::vector<int>& sizes) {
              std::vector<std::vector<std::vector<int>>> out;
              for (const OrderedPartition& p :
                   enumerate_partitions(SizeProfile(Ring(n), sizes)))
                  out.push_back(partition_out(p));
              return out;
          },
          py::arg("n"), py::arg("sizes"));

    m.def("sample_partitions",
          [](int n, const std::vector<int>& sizes, std::uint64_t count,
             std::uint64_t seed) {
              std::vector<std::vector<std::vector<int>>> out;
              for (const OrderedPartition& p :
                   sample_partitions(SizeProfile(Ring(n), sizes), count, seed))
                  out.push_back(partition_out(p));
              return out;
          },
          py::arg("n"), py::arg("sizes"), py::arg("count"), py::arg("seed"));

    m.def("run_table1",
          [](int n, py::object sizes, bool exhaustive, std::uint64_t sample_size,
             std::uint64_t seed, int workers) {
              Ring ring(n);
              SizeProfile profile = sizes.is_none()
                                        ? profile_for_n(ring)
                                        : SizeProfile(ring, sizes.cast<std::vector<int>>());
              Table1Options options;
              options.exhaustive = exhaustive;
              options.sample_size = sample_size;
              options.seed = seed;
              options.workers = workers;
              return json_to_py(to_json(run_table1(profile, options)));
          },
          py::arg("n"), py::arg("sizes") = py::none(), py::arg("exhaustive") = true,
          py::arg("sample_size") = 300, py::arg("seed") = 1, py::arg("workers") = 1);

    m.def("verify",
          [](const std::string& theorem, int n, int k, bool exhaustive,
             std::uint64_t samples, std::uint64_t seed) {
              Ring ring(n);
              VerifyMode mode = exhaustive ? VerifyMode::Exhaustive()
                                           : VerifyMode::Sampled(samples, seed);
              VerificationReport report;
              if (theorem == "patterson")
                  report = verify_patterson(ring, mode);
              else if (theorem == "two-alphabet")
                  report = verify_two_alphabet_theorem(ring, mode);
              else if (theorem == "sparse")
                  report = verify_sparse_theorem(ring, k);
              else if (theorem == "singletons")
                  report = verify_singletons_proposition(ring, k);
              else
                  throw Error("unknown theorem: " + theorem);
              return json_to_py(to_json(report));
          },
          py::arg("theorem"), py::arg("n"), py::arg("k") = 3,
          py::arg("exhaustive") = true, py::arg("samples") = 1000, py::arg("seed") = 1);
}
