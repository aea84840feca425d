#include "wwlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace wwlab {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {
// JSON has no non-finite numbers; those become null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }
}  // namespace

void write_csv(std::ostream& os, const std::vector<ScalingRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.n << ',' << format_double(r.delta) << ',' << format_double(r.cap) << ',' << format_double(r.data_norm)
       << ',' << format_double(r.sup_norm) << ',' << format_double(r.qtilde_norm) << ','
       << format_double(r.ctilde_norm) << ',' << format_double(r.ratio) << ',' << format_double(r.runtime_ms) << '\n';
  }
}

Json to_json(const ScalingRecord& r) {
  Json j;
  j["N"] = r.n;
  j["delta"] = number(r.delta);
  j["T"] = number(r.cap);
  j["data_norm"] = number(r.data_norm);
  j["sup_norm"] = number(r.sup_norm);
  j["qtilde_norm"] = number(r.qtilde_norm);
  j["ctilde_norm"] = number(r.ctilde_norm);
  j["ratio"] = number(r.ratio);
  j["runtime_ms"] = number(r.runtime_ms);
  j["doubling_change"] = number(r.doubling_change);
  if (r.support_sup_norm) j["support_sup_norm"] = number(*r.support_sup_norm);
  return j;
}

Json to_json(const std::vector<ScalingRecord>& records) {
  Json j = Json::array();
  for (const auto& r : records) j.push_back(to_json(r));
  return j;
}

Json to_json(const ExponentFit& f) {
  return Json{{"slope", number(f.slope)},
              {"intercept", number(f.intercept)},
              {"stderr", number(f.stderr_slope)},
              {"r_squared", number(f.r_squared)},
              {"points", f.points}};
}

Json to_json(const ThresholdReport& rep) {
  Json j;
  j["order"] = to_string(rep.order);
  j["dim"] = rep.dim;
  j["law"] = to_string(rep.kind);
  j["space"] = to_string(rep.space);
  j["threshold"] = rep.theoretical_threshold;
  j["formal"] = rep.formal;
  j["label"] = rep.label;
  Json rows = Json::array();
  for (const auto& row : rep.rows)
    rows.push_back(Json{{"s", row.s}, {"verdict", to_string(row.verdict)}, {"fit", to_json(row.fit)},
                        {"records", to_json(row.records)}});
  j["rows"] = rows;
  j["last_grows"] = rep.last_grows ? Json(*rep.last_grows) : Json(nullptr);
  j["first_bounded"] = rep.first_bounded ? Json(*rep.first_bounded) : Json(nullptr);
  j["brackets"] = rep.brackets;
  return j;
}

Json to_json(const ModelScalingReport& rep) {
  Json j;
  j["system"] = rep.system == ModelSystem::kSurfaceTension ? "surface-tension-model" : "gravity-model";
  Json terms = Json::array();
  for (const auto& t : rep.terms)
    terms.push_back(Json{{"equation", t.equation}, {"term", t.term}, {"degree", to_string(t.degree)}});
  j["terms"] = terms;
  j["invariant"] = rep.invariant;
  j["critical_from_h"] = to_string(rep.critical_from_h);
  j["critical_from_psi"] = to_string(rep.critical_from_psi);
  j["critical_consistent"] = rep.critical_consistent;
  return j;
}

Json to_json(const AuditReport& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = r.informational ? "info" : (r.pass ? "pass" : "fail");
  j["measured_min"] = number(r.measured_min);
  j["measured_max"] = number(r.measured_max);
  j["claimed_band"] = r.informational ? Json(nullptr) : Json::array({number(r.claimed_lo), number(r.claimed_hi)});
  j["worst_point"] = r.worst_point;
  j["samples"] = r.samples;
  return j;
}

Json to_json(const std::vector<AuditReport>& reports) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wwlab
