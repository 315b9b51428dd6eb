#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace hecke::cli {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every acceptance criterion; each result is also streamed to `progress` when given.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

std::string format_line(const CriterionResult& r);

/// 0 when every failure is listed in `expected_failures` and every listed id fails.
int acceptance_exit_code(const std::vector<CriterionResult>& results,
                         const std::set<std::string>& expected_failures, std::ostream& out);

}  // namespace hecke::cli
