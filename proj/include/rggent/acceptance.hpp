#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rggent/serialize.hpp"

namespace rggent::acceptance {

struct Options {
  std::uint64_t seed = 20240817;
  int workers = 1;
  std::string cli_path;  // needed by the determinism criterion
  bool verbose = false;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::vector<Verdict> verdicts;
};

struct Report {
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
  int failures() const;
};

// Runs every criterion, printing one pass/fail line per criterion to `log`.
Report run_all(const Options& options, std::ostream& log);

// Runs a single criterion by number (1-12).
CriterionResult run_criterion(int number, const Options& options);

}  // namespace rggent::acceptance
