#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "qspect/errors.hpp"
#include "qspect/essential.hpp"
#include "qspect/io.hpp"
#include "qspect/parser.hpp"
#include "qspect/s_spectrum.hpp"
#include "qspect/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailures = 1;   // verification suites reported failures
constexpr int kUserError = 2;  // bad input / flags / files
constexpr int kNumerical = 3;  // solver non-convergence and friends
constexpr int kConflict = 4;   // internal consistency conflict

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    qspect::write_file(out_path, content);
}

bool parse_grid(const std::string& text, int& n_re, int& n_rad) {
  const auto x = text.find('x');
  if (x == std::string::npos) return false;
  try {
    n_re = std::stoi(text.substr(0, x));
    n_rad = std::stoi(text.substr(x + 1));
  } catch (...) {
    return false;
  }
  return n_re >= 2 && n_rad >= 2;
}

bool parse_quat_flag(const std::string& text, qspect::Quaternion& q) {
  double v[4];
  int pos = 0;
  std::string rest = text;
  for (int i = 0; i < 4; ++i) {
    std::size_t used = 0;
    try {
      v[i] = std::stod(rest, &used);
    } catch (...) {
      return false;
    }
    rest = rest.substr(used);
    if (i < 3) {
      if (rest.empty() || rest[0] != ',') return false;
      rest = rest.substr(1);
    }
    ++pos;
  }
  if (!rest.empty()) return false;
  q = {v[0], v[1], v[2], v[3]};
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternionic spectral toolkit"};
  app.require_subcommand(1);

  std::string matrix_file, out_path, env_file, expr_text, q_text, suite = "all";
  std::string grid_text = "21x11", data_dir = "data";
  double tol = 0.0;
  double re_min = 0.0, re_max = 2.0, rad_max = 1.0;
  std::uint64_t seed = 42;

  auto* spectrum = app.add_subcommand("spectrum", "classify the S-spectrum of a matrix");
  spectrum->add_option("matrix", matrix_file, "matrix JSON file")->required();
  spectrum->add_option("--tol", tol, "classification tolerance override (positive)");
  spectrum->add_option("--out", out_path, "output file (default stdout)");

  auto* scan_cmd = app.add_subcommand("scan", "sample the mu field over a (re, rad) grid");
  scan_cmd->add_option("matrix", matrix_file, "matrix JSON file")->required();
  scan_cmd->add_option("--re-min", re_min, "lower real bound");
  scan_cmd->add_option("--re-max", re_max, "upper real bound");
  scan_cmd->add_option("--rad-max", rad_max, "upper imaginary-radius bound");
  scan_cmd->add_option("--grid", grid_text, "grid as N_re x N_rad, e.g. 21x11");
  scan_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* fredholm = app.add_subcommand("fredholm", "Fredholm data of an operator expression");
  fredholm->add_option("expr", expr_text, "operator expression")->required();
  fredholm->add_option("--env", env_file, "environment JSON with named diagonals/patches");
  fredholm->add_option("--q", q_text, "quaternion q0,q1,q2,q3: report the verdict for R_q");
  fredholm->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "suite name or 'all'");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--data", data_dir, "fixture/golden data directory");
  verify->add_option("--out", out_path, "JSON report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUserError;
  }

  try {
    if (spectrum->parsed()) {
      const qspect::QMatrix a = qspect::read_matrix(matrix_file);
      if (tol < 0.0) throw std::invalid_argument("--tol must be positive");
      const auto report =
          tol > 0.0 ? qspect::spectrum_report(a, tol) : qspect::spectrum_report(a);
      emit(out_path, qspect::spectrum_to_json(report));
      return kOk;
    }

    if (scan_cmd->parsed()) {
      int n_re = 0, n_rad = 0;
      if (!parse_grid(grid_text, n_re, n_rad))
        throw std::invalid_argument("--grid must be N_re x N_rad with both at least 2");
      if (re_max <= re_min || rad_max < 0.0)
        throw std::invalid_argument("scan range is empty or negative");
      const qspect::QMatrix a = qspect::read_matrix(matrix_file);
      emit(out_path, qspect::scan_to_csv(qspect::scan(a, re_min, re_max, rad_max, n_re, n_rad)));
      return kOk;
    }

    if (fredholm->parsed()) {
      qspect::Environment env;
      if (!env_file.empty()) env = qspect::read_environment(env_file);
      qspect::StructuredOperator op = [&] {
        try {
          return qspect::parse_expr(expr_text, env);
        } catch (const qspect::SyntaxError& e) {
          std::fprintf(stderr, "error: %s\n  %s\n  %*s^\n", e.what(), expr_text.c_str(),
                       static_cast<int>(e.offset), "");
          std::exit(kUserError);
        }
      }();
      if (q_text.empty()) {
        emit(out_path, qspect::fredholm_to_json(expr_text, qspect::fredholm_data(op)));
      } else {
        qspect::Quaternion q;
        if (!parse_quat_flag(q_text, q))
          throw std::invalid_argument("--q must be four comma-separated reals");
        emit(out_path, qspect::verdict_to_json(q, qspect::is_fredholm_at(op, q)));
      }
      return kOk;
    }

    // verify
    const auto reports = qspect::run_verify(suite, seed, data_dir);
    bool ok = true;
    for (const auto& r : reports) {
      std::fprintf(stderr, "[%s] %-18s cases=%d failures=%zu\n", r.passed() ? "PASS" : "FAIL",
                   r.suite.c_str(), r.cases, r.failures.size());
      for (const auto& f : r.failures) std::fprintf(stderr, "    %s\n", f.c_str());
      ok = ok && r.passed();
    }
    emit(out_path, qspect::verify_to_json(reports));
    return ok ? kOk : kFailures;
  } catch (const qspect::ConflictError& e) {
    std::fprintf(stderr, "conflict: %s\n", e.what());
    return kConflict;
  } catch (const qspect::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kNumerical;
  } catch (const qspect::SyntaxError& e) {
    std::fprintf(stderr, "error: %s (offset %zu)\n", e.what(), e.offset);
    return kUserError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUserError;
  }
}
