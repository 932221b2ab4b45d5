#pragma once

#include <string>

#include "qspect/essential.hpp"
#include "qspect/parser.hpp"
#include "qspect/qmatrix.hpp"
#include "qspect/s_spectrum.hpp"

namespace qspect {

/// Reads a quaternionic matrix from JSON:
///   {"n": int, "entries": [[[q0,q1,q2,q3], ...], ...]}
/// Throws DimensionError / std::invalid_argument on malformed input.
QMatrix read_matrix(const std::string& path);

/// Reads named diagonals and finite-rank patches:
///   {"diagonals": {NAME: {"prefix": [[q0..q3],...], "limit": [q0..q3]}},
///    "patches":   {NAME: {"pairs": [{"u": vec, "v": vec}, ...]}}}
/// with sparse vectors {"support": [idx,...], "values": [[q0..q3],...]}.
Environment read_environment(const std::string& path);

/// Shortest double representation with up to 17 significant digits
/// ("%.17g"), used for every float in emitted files so identical inputs
/// produce byte-identical outputs.
std::string format_double(double x);

std::string spectrum_to_json(const SpectrumReport& report);
std::string scan_to_csv(const ScanField& field);
std::string fredholm_to_json(const std::string& expr, const FredholmData& data);
std::string verdict_to_json(const Quaternion& q, const EssentialVerdict& verdict);

const char* status_name(FredholmStatus status);
const char* method_name(FredholmMethod method);

void write_file(const std::string& path, const std::string& content);

}  // namespace qspect
