#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "wwlab/experiments.hpp"
#include "wwlab/multipliers.hpp"

namespace wwlab {

using Json = nlohmann::ordered_json;

/// Shortest round-trip text of a double ("%.17g"), "nan" and "inf" for non-finite values.
std::string format_double(double v);

inline constexpr const char* kCsvHeader = "N,delta,T,data_norm,sup_norm,qtilde_norm,ctilde_norm,ratio,runtime_ms";

void write_csv(std::ostream& os, const std::vector<ScalingRecord>& records);

Json to_json(const ScalingRecord& record);
Json to_json(const std::vector<ScalingRecord>& records);
Json to_json(const ExponentFit& fit);
Json to_json(const ThresholdReport& report);
Json to_json(const ModelScalingReport& report);

/// Verify report entry: {check, status, measured_min, measured_max, claimed_band, worst_point}.
Json to_json(const AuditReport& report);
Json to_json(const std::vector<AuditReport>& reports);

/// Serializes with a fixed layout so that equal inputs produce equal bytes.
std::string dump(const Json& j);

}  // namespace wwlab
