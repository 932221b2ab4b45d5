#pragma once

#include <vector>

#include "qspect/qmatrix.hpp"

namespace qspect {

/// Pseudo-resolvent R_q(A) = A^2 - 2 Re(q) A + |q|^2 I.  All
/// coefficients are real, so R depends on q only through (Re q, |q|)
/// and R_q = R_qbar.
QMatrix pseudo_resolvent(const QMatrix& a, const Quaternion& q);

/// Scale-aware default threshold: R_q is quadratic in A.
double default_point_tol(const QMatrix& a);

/// Point S-spectrum as eigen-spheres of chi(A) with quaternionic
/// multiplicities, deduplicated and sorted in (re, rad) order.
std::vector<std::pair<SphereClass, int>> point_spectrum(const QMatrix& a);

/// Approximate S-point witness mu(A, q) = sigma_min(chi(R_q(A)))
///   = min over unit phi of ||R_q(A) phi||.
/// Zero (up to tolerance) exactly on the S-spectrum at finite
/// dimension.
double mu(const QMatrix& a, const Quaternion& q);

struct Classification {
  bool point = false;        // dim ker R_q(A) >= 1
  bool approximate = false;  // mu(A, q) <= tol
  bool compression = false;  // dim ker R_qbar(A') >= 1
  bool resolvent = false;    // mu(A, q) > tol
  double mu_value = 0.0;
};

Classification classify(const QMatrix& a, const Quaternion& q, double tol);

struct SphereEntry {
  SphereClass cls;
  int multiplicity = 0;
  bool point = false;
  bool approximate = false;
  bool compression = false;
};

/// Full classification report.  The residual and continuous parts of
/// the S-spectrum are provably empty at finite dimension; the report
/// carries that statement explicitly instead of omitting the fields.
struct SpectrumReport {
  std::vector<SphereEntry> spheres;
  double tol_point = 0.0;
  bool residual_empty = true;    // sigma_rS = {} in finite dimension
  bool continuous_empty = true;  // sigma_cS = {} in finite dimension
};

SpectrumReport spectrum_report(const QMatrix& a);

/// Same with an explicit classification tolerance (must be positive).
SpectrumReport spectrum_report(const QMatrix& a, double tol_point);

/// mu sampled at the canonical representatives re + rad*i over a
/// rectangular grid of the (re, rad) half-plane, row major with re as
/// the slow index.
struct ScanField {
  std::vector<double> re;
  std::vector<double> rad;
  std::vector<double> mu;  // size re.size() * rad.size()
};

ScanField scan(const QMatrix& a, double re_min, double re_max, double rad_max,
               int n_re, int n_rad);

}  // namespace qspect
