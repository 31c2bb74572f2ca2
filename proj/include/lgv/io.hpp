#pragma once

#include <string>

#include <json.hpp>

#include "lgv/partition.hpp"
#include "lgv/report.hpp"
#include "lgv/scan.hpp"
#include "lgv/triangular.hpp"

namespace lgv {

// "3,3,3" -> Partition; throws std::invalid_argument on malformed input
Partition parse_partition(const std::string& text);

// row-major flat entries "0,1,1" -> sequence of order p (validated later
// against lambda by the callers)
TriangularSequence parse_flat_sequence(const std::string& text, int p);

// Report schema (key order fixed, big integers as decimal strings):
// {"lambda":[...],"mu":[...],"total":"...",
//  "terms":[{"s":[...],"det":"..."}],"partial":{"<f>":"..."}}
// "partial" is present for p = 3 only.
nlohmann::ordered_json report_to_json(const CoefficientReport& rep);
CoefficientReport report_from_json(const nlohmann::ordered_json& j);
std::string report_to_table(const CoefficientReport& rep);

// scan record renderings; CSV columns: lambda;mu;total;min_partial;violations
std::string scan_csv_header();
std::string scan_record_csv(const ScanRecord& rec);
nlohmann::ordered_json scan_record_json(const ScanRecord& rec);
std::string scan_record_table(const ScanRecord& rec);
nlohmann::ordered_json scan_summary_json(const ScanSummary& summary);
std::string scan_summary_table(const ScanSummary& summary);

} // namespace lgv
