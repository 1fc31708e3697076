#pragma once

#include <string>
#include <vector>

#include "hopfcoh/spec_io.hpp"

namespace hopfcoh {

enum class Suite { Axioms, Complexes, Cohomology, Cup, Extensions, All };
Suite parse_suite(const std::string& s);
std::string suite_name(Suite s);

struct SuiteOptions {
  std::size_t threads = 1;
  double entry_budget = 1e8;
};

struct CheckResult {
  std::string suite, name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::size_t failed() const;
  /// One line per check, then a summary line.
  std::string render() const;
  Json to_json() const;
};

/// Runs the invariant checks of one suite (or all of them) on H.  Degree
/// ranges shrink with dim H so every bundled algebra finishes quickly; the
/// report contains no timings and is identical for every thread count.
SuiteReport run_suite(const HopfAlgebraPtr& h, Suite suite, const SuiteOptions& options = {});

}  // namespace hopfcoh
