#include "qspect/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qspect/errors.hpp"

namespace qspect {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Quaternion parse_quat(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("quaternion must be an array of four reals");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

SparseVector parse_sparse(const json& j) {
  SparseVector v;
  if (!j.contains("support") || !j.contains("values"))
    throw std::invalid_argument("sparse vector needs 'support' and 'values'");
  for (const auto& s : j.at("support")) v.support.push_back(s.get<std::size_t>());
  for (const auto& q : j.at("values")) v.values.push_back(parse_quat(q));
  if (v.support.size() != v.values.size())
    throw std::invalid_argument("sparse vector support/values length mismatch");
  return v;
}

}  // namespace

QMatrix read_matrix(const std::string& path) {
  const json j = load_json(path);
  if (!j.contains("n") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs 'n' and 'entries'");
  const auto n = j.at("n").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != n) throw DimensionError("matrix JSON: row count differs from n");
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw DimensionError("matrix JSON: column count differs from n");
    for (std::size_t jj = 0; jj < n; ++jj) m.at(i, jj) = parse_quat(entries[i][jj]);
  }
  return m;
}

Environment read_environment(const std::string& path) {
  const json j = load_json(path);
  Environment env;
  if (j.contains("diagonals")) {
    for (const auto& [name, spec] : j.at("diagonals").items()) {
      DiagonalSpec d;
      if (spec.contains("prefix"))
        for (const auto& q : spec.at("prefix")) d.prefix.push_back(parse_quat(q));
      if (spec.contains("limit")) d.limit = parse_quat(spec.at("limit"));
      env.diagonals.emplace(name, std::move(d));
    }
  }
  if (j.contains("patches")) {
    for (const auto& [name, spec] : j.at("patches").items()) {
      FiniteRankPatch p;
      for (const auto& pair : spec.at("pairs"))
        p.pairs.push_back({parse_sparse(pair.at("u")), parse_sparse(pair.at("v"))});
      env.patches.emplace(name, std::move(p));
    }
  }
  return env;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string spectrum_to_json(const SpectrumReport& report) {
  std::ostringstream os;
  os << "{\n  \"spheres\": [";
  for (std::size_t t = 0; t < report.spheres.size(); ++t) {
    const auto& e = report.spheres[t];
    os << (t ? ",\n    " : "\n    ");
    os << "{\"re\": " << format_double(e.cls.re) << ", \"rad\": " << format_double(e.cls.rad)
       << ", \"mult\": " << e.multiplicity << ", \"flags\": {\"point\": "
       << (e.point ? "true" : "false") << ", \"approximate\": "
       << (e.approximate ? "true" : "false") << ", \"compression\": "
       << (e.compression ? "true" : "false") << "}}";
  }
  os << (report.spheres.empty() ? "]" : "\n  ]") << ",\n";
  os << "  \"tol_point\": " << format_double(report.tol_point) << ",\n";
  os << "  \"residual_empty\": " << (report.residual_empty ? "true" : "false") << ",\n";
  os << "  \"continuous_empty\": " << (report.continuous_empty ? "true" : "false") << "\n}\n";
  return os.str();
}

std::string scan_to_csv(const ScanField& field) {
  std::ostringstream os;
  os << "re,rad,mu\n";
  std::size_t t = 0;
  for (double re : field.re)
    for (double rad : field.rad)
      os << format_double(re) << ',' << format_double(rad) << ','
         << format_double(field.mu[t++]) << '\n';
  return os.str();
}

const char* status_name(FredholmStatus status) {
  switch (status) {
    case FredholmStatus::Fredholm:
      return "Fredholm";
    case FredholmStatus::LeftSemiOnly:
      return "LeftSemiOnly";
    case FredholmStatus::RightSemiOnly:
      return "RightSemiOnly";
    case FredholmStatus::Neither:
      return "Neither";
  }
  return "?";
}

const char* method_name(FredholmMethod method) {
  switch (method) {
    case FredholmMethod::Symbolic:
      return "symbolic";
    case FredholmMethod::Oracle:
      return "oracle";
    case FredholmMethod::BothAgree:
      return "both-agree";
  }
  return "?";
}

namespace {

std::string dim_to_json(int dim) {
  if (dim == FredholmData::kInfinite) return "\"inf\"";
  if (dim < 0) return "null";
  return std::to_string(dim);
}

}  // namespace

std::string fredholm_to_json(const std::string& expr, const FredholmData& data) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"expr\": \"" << expr << "\",\n";
  os << "  \"dim_ker\": " << dim_to_json(data.dim_ker) << ",\n";
  os << "  \"dim_coker\": " << dim_to_json(data.dim_coker) << ",\n";
  os << "  \"index\": " << (data.index ? std::to_string(*data.index) : "null") << ",\n";
  os << "  \"status\": \"" << status_name(data.status) << "\",\n";
  os << "  \"method\": \"" << method_name(data.method) << "\"\n";
  os << "}\n";
  return os.str();
}

std::string verdict_to_json(const Quaternion& q, const EssentialVerdict& verdict) {
  std::ostringstream os;
  const char* kind = verdict.in_sigma_e ? "essential"
                     : verdict.resolvent ? "resolvent"
                                         : "sigma_k";
  os << "{\n";
  os << "  \"q\": [" << format_double(q.q0) << ", " << format_double(q.q1) << ", "
     << format_double(q.q2) << ", " << format_double(q.q3) << "],\n";
  os << "  \"sphere\": {\"re\": " << format_double(verdict.cls.re)
     << ", \"rad\": " << format_double(verdict.cls.rad) << "},\n";
  os << "  \"verdict\": \"" << kind << "\",\n";
  os << "  \"k\": " << (verdict.k ? std::to_string(*verdict.k) : "null") << ",\n";
  os << "  \"method\": \"" << method_name(verdict.data.method) << "\"\n";
  os << "}\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

}  // namespace qspect
