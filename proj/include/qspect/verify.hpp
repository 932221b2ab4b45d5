#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qspect {

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Names of all verification suites in canonical execution order.
std::vector<std::string> suite_names();

/// Runs one named suite (or every suite for "all").  `data_dir` points
/// at the committed fixture/golden directory used by the golden-files
/// suite.  Throws UnknownName for unrecognized suite names.
std::vector<SuiteReport> run_verify(const std::string& suite, std::uint64_t seed,
                                    const std::string& data_dir);

std::string verify_to_json(const std::vector<SuiteReport>& reports);

}  // namespace qspect
