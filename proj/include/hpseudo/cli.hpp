#pragma once

#include <optional>
#include <string>

#include "hpseudo/report.hpp"

namespace hp {

enum ExitCode { kExitPass = 0, kExitParse = 2, kExitVerify = 3 };

struct RunConfig {
  std::string command;   // validate | axioms | complex | singular | lattice | all
  std::string spec;      // path; `all` without a spec runs the built-in battery
  int degree_cap = 4;
  int jet_order = 4;
  std::string pi_module; // JSON file: {"dim": k, "act": [matrices], "lambda": "p/q"}
  std::string sp_rep = "pi:1";  // "pi:n", "sym2", or JSON file {"f": [matrices]} / {"gl": [...]}
  std::optional<std::string> lambda;
};

struct RunResult {
  int exit_code = kExitPass;
  std::string report;   // empty on parse errors
  std::string message;  // one line for stderr
};

// Never throws; parse problems come back with kExitParse.
RunResult run(const RunConfig& cfg);

}  // namespace hp
