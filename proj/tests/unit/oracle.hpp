#pragma once

// Reference values produced by tests/oracles/gen_expected.py.

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qabe/distribution.hpp"

namespace qabe::testing {

inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(QABE_ORACLE_FILE);
    if (!in) throw std::runtime_error("cannot open " QABE_ORACLE_FILE);
    return nlohmann::json::parse(in);
  }();
  return data;
}

// [[num, den, coeff], ...]
inline FormalSum sum_from_terms(const nlohmann::json& terms) {
  FormalSum s;
  for (const auto& t : terms)
    s.add_term(TorusPoint::make(t[0].get<std::int64_t>(), t[1].get<std::int64_t>()), t[2].get<std::int64_t>());
  return s;
}

}  // namespace qabe::testing
