#include "qabe/report.hpp"

#include <sstream>

namespace qabe {

Verdict Report::outcome() const {
  bool inconclusive = false;
  for (const auto& c : cases) {
    if (c.outcome == Verdict::fail) return Verdict::fail;
    if (c.outcome == Verdict::inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::inconclusive : Verdict::pass;
}

int Report::exit_code() const {
  switch (outcome()) {
    case Verdict::pass:
      return 0;
    case Verdict::fail:
      return 1;
    case Verdict::inconclusive:
      return 3;
  }
  return 1;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["outcome"] = verdict_name(outcome());
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases)
    j["cases"].push_back({{"input", c.input}, {"outcome", verdict_name(c.outcome)}, {"certificate", c.certificate}});
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  if (value_only) {
    for (const auto& c : cases) out << c.text << "\n";
    return out.str();
  }
  std::size_t passed = 0;
  for (const auto& c : cases) {
    if (c.outcome == Verdict::pass) ++passed;
    out << verdict_name(c.outcome) << "  " << c.input;
    if (!c.text.empty()) out << "  " << c.text;
    out << "\n";
  }
  out << "summary: " << verdict_name(outcome()) << " (" << passed << "/" << cases.size() << " cases passed, "
      << static_cast<long long>(elapsed_ms) << " ms)\n";
  return out.str();
}

}  // namespace qabe
