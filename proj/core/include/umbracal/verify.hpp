#pragma once

// Named numerical checks grouped into suites. Each check measures one
// discrepancy and compares it with a tolerance; informational checks report a
// number without affecting the verdict.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umbracal {

enum class Suite { kIntegrals, kSeries, kUmbral, kHeat, kLacunary, kAll };

/// Accepts integrals, series, umbral, heat, lacunary, all.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct CheckResult {
  std::string name;
  Suite suite = Suite::kAll;
  int criterion = 0;  // acceptance criterion number, 0 if none
  bool informational = false;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Runs every check in the suite (all suites for kAll). When tolerance is
/// set it replaces the tolerance of every non-informational check.
SuiteReport run_suite(Suite suite, std::optional<double> tolerance = std::nullopt);

}  // namespace umbracal
