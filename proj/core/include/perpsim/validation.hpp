#pragma once

// End-to-end validation suite: every analytic-kernel and sampler invariant,
// plus the oracle cross-checks, executed as named measurements. A check
// never throws on failure; it lands in the report as measured vs tolerance
// so a caller (the CLI, the acceptance tests) can print and gate on it.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace perpsim {

struct ValidationCheck {
  std::string name;
  double measured;   // worst observed deviation for this check
  double tolerance;  // contract bound; pass iff measured <= tolerance
  bool pass;
};

struct ValidationReport {
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  std::vector<ValidationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Runs the full suite. n controls the main sampler pass (moments, coupling
// frequency, uniforms per sample, output range, determinism replay); the
// grid checks are fixed-size, the round trips and bisection comparison use
// 1e4 points, and the KS comparison uses 1e5 perfect vs 1e5 forward-chain
// samples regardless of n. Tolerances are fixed contract values calibrated
// for n = 1e6; smaller n widens the statistical noise, not the bounds.
// Throws std::invalid_argument if n < 1e4.
ValidationReport run_validation_suite(std::uint64_t seed, std::uint64_t n);

// One aligned line per check plus an overall verdict line. Byte-identical
// output for identical reports.
void write_report_text(std::ostream& out, const ValidationReport& report);

// Header "check_name,measured,tolerance,pass", one row per check, pass as
// 1 or 0. Byte-identical output for identical reports.
void write_report_csv(std::ostream& out, const ValidationReport& report);

}  // namespace perpsim
