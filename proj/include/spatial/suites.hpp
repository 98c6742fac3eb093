#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spatial/report.hpp"
#include "spatial/scalar.hpp"

namespace spatial {

struct SuiteConfig {
  int m = 3;          // largest ground set size tested (all sizes 1..m are used)
  int nmax = 5;       // largest rank / operator index
  std::uint64_t seed = 7;
  Field field = Field::Q;
  int probes = 3;     // random probes per parameter combination
  int order = 8;      // truncation order of formal series
  int K = 100;        // truncation of numeric series
  double tol = 1e-8;  // tolerance of numeric comparisons
};

// Suite names of a module, e.g. suite_names("stirling") contains "olson".
std::vector<std::string> suite_names(const std::string& module);
std::vector<std::string> suite_modules();

// Runs one randomized suite; the random stream depends only on the config and the
// suite's qualified name. Throws std::invalid_argument for unknown names.
Report run_suite(const std::string& module, const std::string& suite, const SuiteConfig& cfg);

// Every suite of every module, in a fixed order.
std::vector<Report> run_all_suites(const SuiteConfig& cfg);

}  // namespace spatial
