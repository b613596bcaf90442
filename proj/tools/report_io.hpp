#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gbell/isolate.hpp"
#include "gbell/report.hpp"

namespace gbell::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

/// One CLI result: a JSON payload plus the same content as a flat table.
struct Payload {
  Json results = Json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline Json fields_json(const Fields& f) {
  Json j = Json::object();
  for (const auto& [k, v] : f) j[k] = v;
  return j;
}

inline std::string fields_text(const Fields& f) {
  std::string out;
  for (const auto& [k, v] : f) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

inline Json root_json(const RealRoot& r) {
  Json j;
  if (r.is_point()) {
    j["point"] = true;
    j["value"] = to_string(r.lo());
  } else {
    j["point"] = false;
    j["interval"] = {to_string(r.lo()), to_string(r.hi())};
  }
  j["multiplicity"] = r.multiplicity();
  j["approx"] = r.approx();
  return j;
}

inline Payload report_payload(const VerificationReport& r) {
  Payload p;
  const ReportSummary s = r.summary();
  p.results["suite"] = r.suite;
  p.results["seed"] = r.seed;
  p.results["passed"] = r.passed();
  p.results["summary"] = {{"pass", s.pass},
                          {"fail", s.fail},
                          {"undecided", s.undecided},
                          {"report_only", s.report_only},
                          {"total", s.total()}};
  p.results["findings"] = fields_json(r.findings);
  Json cases = Json::array();
  p.header = {"suite", "seed", "case", "inputs", "clause", "expected", "observed", "outcome"};
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    const CaseRecord& c = r.cases[i];
    cases.push_back({{"inputs", fields_json(c.inputs)},
                     {"clause", c.clause},
                     {"expected", c.expected},
                     {"observed", c.observed},
                     {"outcome", to_string(c.outcome)}});
    p.rows.push_back({r.suite, std::to_string(r.seed), std::to_string(i), fields_text(c.inputs), c.clause, c.expected,
                      c.observed, to_string(c.outcome)});
  }
  p.results["cases"] = std::move(cases);
  return p;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const Payload& p) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\n";
  };
  line(p.header);
  for (const auto& r : p.rows) line(r);
}

inline Json envelope(const std::string& command, Json inputs, Json results, double millis) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["timing"] = {{"milliseconds", millis}};
  return j;
}

}  // namespace gbell::cli
