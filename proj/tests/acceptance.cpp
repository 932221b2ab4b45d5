// Acceptance harness: runs every verification suite once with the
// documented default seed and prints one PASS/FAIL line per criterion,
// including the runtime budget checks for the timed criteria.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qspect/verify.hpp"

namespace {

struct Criterion {
  const char* label;
  const char* suite;
  double budget_seconds;  // <= 0: untimed
};

}  // namespace

int main(int argc, char** argv) {
  const std::string data_dir = argc > 1 ? argv[1] : "data";
  const std::uint64_t seed = 42;

  const std::vector<Criterion> criteria = {
      {"01 embedding soundness (multiplicativity, even rank)", "chi-embedding", 5.0},
      {"02 point spectrum matches the mu witness", "point-spectrum", 15.0},
      {"03 axial and adjoint symmetry of mu", "axial-symmetry", 0},
      {"04 non-empty spectrum inside the norm radius", "nonempty-radius", 0},
      {"05 square matrices have index zero", "finite-dim-index", 0},
      {"06 shift index suite and sphere verdicts", "index-laws", 120.0},
      {"07 index invariance under perturbations", "perturbation", 0},
      {"08 parametrix residual certificates", "parametrix", 0},
      {"09 finite rank decomposition round-trips", "finite-rank", 0},
      {"10 Neumann series inverse accuracy", "neumann", 0},
      {"11 CLI outputs match committed golden files", "golden-files", 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<qspect::SuiteReport> reports;
    std::string error;
    try {
      reports = qspect::run_verify(c.suite, seed, data_dir);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = error.empty();
    int cases = 0;
    for (const auto& r : reports) {
      cases += r.cases;
      ok = ok && r.passed();
    }
    const bool in_budget = c.budget_seconds <= 0 || elapsed < c.budget_seconds;
    ok = ok && in_budget;

    std::printf("[%s] %-55s cases=%-4d %6.2fs%s\n", ok ? "PASS" : "FAIL", c.label, cases,
                elapsed, in_budget ? "" : "  (over budget)");
    if (!error.empty()) std::printf("       error: %s\n", error.c_str());
    for (const auto& r : reports)
      for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
    if (!ok) ++failed;
  }

  if (failed > 0) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
