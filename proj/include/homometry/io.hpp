#pragma once

#include <string>

#include <json.hpp>

#include "homometry/classify.hpp"
#include "homometry/experiments.hpp"
#include "homometry/multiset.hpp"
#include "homometry/spectral.hpp"

namespace homometry {

// All emitted JSON carries this schema tag.
inline constexpr const char* kSchemaTag = "homometry-lab/v1";

using ordered_json = nlohmann::ordered_json;

// Encodings: SubsetMask as a sorted index array, OrderedPartition as an array
// of those, DistanceMultiset as the multiplicity array from d = 0, and
// AutocorrForm as an array over lags of {"(i,j)": coeff} maps with i <= j,
// 1-based. Decoders reject malformed input with the library's error types.
ordered_json to_json(const SubsetMask& a);
ordered_json to_json(const OrderedPartition& p);
ordered_json to_json(const DistanceMultiset& m);
ordered_json to_json(const AutocorrForm& f);

SubsetMask subset_from_json(Ring ring, const ordered_json& j);
OrderedPartition partition_from_json(Ring ring, const ordered_json& j);
DistanceMultiset multiset_from_json(Ring ring, const ordered_json& j);
AutocorrForm form_from_json(Ring ring, const ordered_json& j);

ordered_json to_json(const VerificationReport& report);
ordered_json to_json(const ExperimentReport& report);

// Benchmark-table CSV: header and one row per report, sizes dash-joined.
// Columns: N,sizes,equivalent,pseudo_only,homometric_only,total_homometric.
std::string table_csv_header();
std::string table_csv_row(const ExperimentReport& report);

}  // namespace homometry
