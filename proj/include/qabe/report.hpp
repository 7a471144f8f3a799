#pragma once

// Results of CLI commands: one record per case plus an overall verdict,
// rendered as text or as JSON.

#include <string>
#include <vector>

#include <json.hpp>

#include "qabe/monomials.hpp"

namespace qabe {

inline constexpr int kReportSchemaVersion = 1;

struct CaseReport {
  std::string input;
  Verdict outcome = Verdict::pass;
  nlohmann::json certificate = nlohmann::json::object();
  std::string text;  // one-line human summary
};

struct Report {
  std::string command;
  std::vector<CaseReport> cases;
  double elapsed_ms = 0;
  // Value commands print the bare value instead of per-case lines.
  bool value_only = false;

  // fail if any case failed, else inconclusive if any was, else pass.
  Verdict outcome() const;
  // 0 pass, 1 fail, 3 inconclusive.
  int exit_code() const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace qabe
