#ifndef FAREYPRIM_VERIFY_HPP_
#define FAREYPRIM_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fareyprim {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// First few failure messages; `failed` has the full count.
  std::vector<std::string> failures;
};

struct VerifyReport {
  std::int64_t max_level = 0;
  /// Sorted by name.
  std::vector<SuiteResult> suites;

  bool passed() const;
  /// {"max_level", "passed", "suites": [...], "failures": ["suite: message", ...]}
  std::string to_json() const;
};

/// Runs every invariant suite over all rationals of both signs with level
/// <= max_level (sequence suites: positive F-sequences with entry sum <=
/// max_level). Randomized suites use a fixed seed. Throws
/// std::invalid_argument for max_level < 1.
VerifyReport run_verification(std::int64_t max_level, unsigned threads = 0);

/// Names accepted by run_suite, sorted.
std::vector<std::string> suite_names();

/// One suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, std::int64_t max_level, unsigned threads = 0);

}  // namespace fareyprim

#endif  // FAREYPRIM_VERIFY_HPP_
