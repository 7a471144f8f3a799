#pragma once

// The qabe command line.  run() is the whole program minus process
// plumbing so tests can drive it directly.
//
//   das-class <p> <q> [--operator-form|--closed-form]
//   verify identities <p> <q> [--seeds K]
//   verify torsion <p> <q>
//   verify main-formula <p> <q> [--policy smallest|largest]
//   verify auxiliary <l>
//   verify seo <p> <q> | --max B
//   verify gamma <p> <q> [--prec bits] [--max-prec bits]
//   eval sin|gamma|xi "<formal sum>" [--prec bits]
//   act <t> "<formal sum>"
//
// Every command accepts --json.  Exit codes: 0 pass, 1 a verification
// failed, 2 usage or parse error, 3 inconclusive at the precision ceiling.

#include <ostream>
#include <string>
#include <vector>

namespace qabe::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qabe::cli
