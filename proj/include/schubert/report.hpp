#pragma once

#include <string>
#include <vector>

#include "schubert/integer.hpp"

namespace schubert {

struct ReportEntry {
  std::string label;
  Integer expected;
  Integer computed;
  std::string source;
  bool pass = false;
};

struct ReportOptions {
  /// Shifts one golden constant by one so the harness must fail.
  bool corrupt_golden = false;
};

/// Recomputes every published number for the surface of planes in a cubic
/// fivefold and compares it with the golden value.
std::vector<ReportEntry> paper_report(const ReportOptions& options = {});

inline bool all_pass(const std::vector<ReportEntry>& entries) {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

}  // namespace schubert
