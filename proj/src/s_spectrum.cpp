#include "qspect/s_spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qspect/errors.hpp"

namespace qspect {

QMatrix pseudo_resolvent(const QMatrix& a, const Quaternion& q) {
  if (a.rows() != a.cols()) throw DimensionError("pseudo_resolvent: square matrix required");
  QMatrix r = a * a;
  const double two_re = 2.0 * q.re();
  const double abs_sq = q.norm_sq();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) -= two_re * a.at(i, j);
    r.at(i, i) += Quaternion(abs_sq);
  }
  return r;
}

double default_point_tol(const QMatrix& a) {
  const double n = op_norm(a);
  return 1e-8 * std::max(1.0, n) * std::max(1.0, n);
}

std::vector<std::pair<SphereClass, int>> point_spectrum(const QMatrix& a) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(chi(a), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericalError("point_spectrum: eigensolver did not converge");

  // Group all 2n eigenvalues by (Re, |Im|); every sphere then shows up
  // with an even complex count, twice its quaternionic multiplicity.
  struct Group {
    SphereClass cls;
    int count = 0;
  };
  std::vector<Group> groups;
  for (Eigen::Index t = 0; t < es.eigenvalues().size(); ++t) {
    std::complex<double> lambda = es.eigenvalues()(t);
    const double scale = 1.0 + std::abs(lambda);
    double rad = std::abs(lambda.imag());
    if (rad <= 1e-10 * scale) rad = 0.0;  // clamp near-real eigenvalues
    const SphereClass cls{lambda.real(), rad};
    bool merged = false;
    for (auto& g : groups) {
      const double tol = 1e-8 * (1.0 + std::hypot(g.cls.re, g.cls.rad));
      if (std::abs(g.cls.re - cls.re) + std::abs(g.cls.rad - cls.rad) < tol) {
        ++g.count;
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back({cls, 1});
  }

  std::vector<std::pair<SphereClass, int>> out;
  for (const auto& g : groups) out.push_back({g.cls, (g.count + 1) / 2});
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return sphere_less(x.first, y.first); });
  return out;
}

double mu(const QMatrix& a, const Quaternion& q) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(chi(pseudo_resolvent(a, q)));
  const auto& sv = svd.singularValues();
  return sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
}

Classification classify(const QMatrix& a, const Quaternion& q, double tol) {
  if (tol <= 0.0) throw DimensionError("classify: tol must be positive");
  const QMatrix r = pseudo_resolvent(a, q);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(chi(r));
  const auto& sv = svd.singularValues();

  Classification c;
  c.mu_value = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
  int small = 0;
  for (Eigen::Index t = 0; t < sv.size(); ++t)
    if (sv(t) <= tol) ++small;
  c.point = small >= 2;  // chi singular values pair up
  c.approximate = c.mu_value <= tol;
  // R_qbar(A') is the adjoint of R_q(A); it shares singular values, so
  // its kernel is nontrivial exactly when R_q(A)'s is.
  c.compression = c.point;
  c.resolvent = !c.approximate;
  return c;
}

SpectrumReport spectrum_report(const QMatrix& a) {
  return spectrum_report(a, default_point_tol(a));
}

SpectrumReport spectrum_report(const QMatrix& a, double tol_point) {
  if (tol_point <= 0.0) throw DimensionError("spectrum_report: tol must be positive");
  SpectrumReport report;
  report.tol_point = tol_point;
  for (const auto& [cls, mult] : point_spectrum(a)) {
    SphereEntry e;
    e.cls = cls;
    e.multiplicity = mult;
    const Classification c = classify(a, cls.representative(), report.tol_point);
    e.point = true;
    e.approximate = c.approximate;
    e.compression = c.compression;
    report.spheres.push_back(e);
  }
  return report;
}

ScanField scan(const QMatrix& a, double re_min, double re_max, double rad_max,
               int n_re, int n_rad) {
  if (n_re < 2 || n_rad < 2) throw DimensionError("scan: grid must be at least 2 in each axis");
  if (rad_max < 0.0) throw DimensionError("scan: rad range must be nonnegative");
  ScanField f;
  for (int i = 0; i < n_re; ++i)
    f.re.push_back(re_min + (re_max - re_min) * i / (n_re - 1));
  for (int j = 0; j < n_rad; ++j)
    f.rad.push_back(rad_max * j / (n_rad - 1));
  for (double re : f.re)
    for (double rad : f.rad) f.mu.push_back(mu(a, Quaternion{re, rad, 0, 0}));
  return f;
}

}  // namespace qspect
