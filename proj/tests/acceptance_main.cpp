// Acceptance suite runner: one pass/fail line per criterion, nonzero exit
// on any failure. --cli points at the rggent binary (used by the
// determinism criterion).

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rggent/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rggent acceptance suite"};
  rggent::acceptance::Options opts;
  int only = 0;
  app.add_option("--cli", opts.cli_path, "path to the rggent CLI binary");
  app.add_option("--seed", opts.seed, "root seed")->envname("RGGENT_SEED");
  app.add_option("--workers", opts.workers, "worker threads");
  app.add_option("--only", only, "run a single criterion (1-12)");
  app.add_flag("--verbose", opts.verbose, "print every verdict");
  CLI11_PARSE(app, argc, argv);

  if (only != 0) {
    rggent::acceptance::CriterionResult res = rggent::acceptance::run_criterion(only, opts);
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << "criterion " << res.number << ": "
              << res.name << "  (" << res.seconds << " s)\n";
    for (const auto& v : res.verdicts) {
      if (!v.pass || opts.verbose) {
        std::cout << "    " << (v.pass ? "ok  " : "FAIL") << " " << v.check
                  << "  statistic=" << v.statistic << " bound=" << v.bound
                  << " sigma=" << v.sigma << "\n";
      }
    }
    return res.pass ? 0 : 1;
  }

  rggent::acceptance::Report report = rggent::acceptance::run_all(opts, std::cout);
  return report.failures();
}
