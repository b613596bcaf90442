#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gbell {

enum class Outcome { pass, fail, undecided, report_only };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::undecided: return "undecided";
    case Outcome::report_only: return "report-only";
  }
  return "?";
}

/// Ordered key/value pairs; values are exact strings.
using Fields = std::vector<std::pair<std::string, std::string>>;

struct CaseRecord {
  Fields inputs;         ///< enough to replay the case
  std::string clause;    ///< which statement is being checked
  std::string expected;
  std::string observed;
  Outcome outcome = Outcome::pass;
};

struct ReportSummary {
  std::size_t pass = 0, fail = 0, undecided = 0, report_only = 0;
  std::size_t total() const { return pass + fail + undecided + report_only; }
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseRecord> cases;
  Fields findings;  ///< suite-level results: n_0, first failing n, ...

  ReportSummary summary() const {
    ReportSummary s;
    for (const auto& c : cases) {
      switch (c.outcome) {
        case Outcome::pass: ++s.pass; break;
        case Outcome::fail: ++s.fail; break;
        case Outcome::undecided: ++s.undecided; break;
        case Outcome::report_only: ++s.report_only; break;
      }
    }
    return s;
  }

  /// No case failed. Undecided and report-only cases do not fail a suite.
  bool passed() const { return summary().fail == 0; }

  std::string finding(const std::string& key) const {
    for (const auto& [k, v] : findings)
      if (k == key) return v;
    return {};
  }

  void add_finding(std::string key, std::string value) { findings.emplace_back(std::move(key), std::move(value)); }

  /// Appends another report's cases; its findings are prefixed with `tag`.
  void absorb(const VerificationReport& other, const std::string& tag) {
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
    for (const auto& [k, v] : other.findings) findings.emplace_back(tag + "." + k, v);
  }
};

}  // namespace gbell
