#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool ok() const;
  std::size_t passed() const;
  std::string to_text() const;
};

struct VerifyOptions {
  unsigned workers = 1;
};

/// lemma2.1, lemma3.x, doubling, wdepth, thmain, sigma, catalog
std::vector<std::string> suite_names();
std::optional<SuiteReport> run_suite(std::string_view name, const VerifyOptions& options = {});

/// Acceptance criteria 1..9, each with its runtime limit checked.
inline constexpr int kCriteria = 9;
std::string criterion_title(int index);
SuiteReport run_criterion(int index, const VerifyOptions& options = {});

/// The generator pairs of the singly-generated check.
std::vector<std::pair<std::string, std::string>> singly_generated_pairs();

}  // namespace pcat
