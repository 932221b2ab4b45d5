#include "qspect/rq_space.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "qspect/errors.hpp"
#include "qspect/kernels.hpp"

namespace qspect {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.q0 << ',' << q.q1 << ',' << q.q2 << ',' << q.q3 << ']';
}

double QVector::norm_sq() const {
  double acc = 0.0;
  for (const auto& q : entries) acc += q.norm_sq();
  return acc;
}

double QVector::norm() const { return std::sqrt(norm_sq()); }

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: length mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector operator*(const QVector& phi, const Quaternion& q) {
  QVector out(phi.size());
  kernels::active().axpy_right(q, phi.entries.data(), out.entries.data(), phi.size());
  return out;
}

Quaternion inner(const QVector& phi, const QVector& psi) {
  if (phi.size() != psi.size()) throw DimensionError("inner: length mismatch");
  return kernels::active().dot_conj(phi.entries.data(), psi.entries.data(), phi.size());
}

bool HilbertBasis::is_orthonormal(double tol) const {
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    for (std::size_t l = k; l < vectors.size(); ++l) {
      Quaternion g = inner(vectors[k], vectors[l]);
      if (k == l) g.q0 -= 1.0;
      if (g.norm() > tol) return false;
    }
  }
  return true;
}

HilbertBasis HilbertBasis::standard(std::size_t n) {
  HilbertBasis b;
  b.vectors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    QVector e(n);
    e[k] = Quaternion::one();
    b.vectors.push_back(std::move(e));
  }
  return b;
}

QVector left_mul(const Quaternion& q, const QVector& phi, const HilbertBasis& basis) {
  if (!basis.is_orthonormal()) throw BasisError("left_mul: basis is not orthonormal");
  QVector out(phi.size());
  for (const auto& bk : basis.vectors) {
    if (bk.size() != phi.size()) throw DimensionError("left_mul: basis/vector length mismatch");
    const Quaternion coeff = q * inner(bk, phi);
    kernels::active().axpy_right(coeff, bk.entries.data(), out.entries.data(), out.size());
  }
  return out;
}

QVector left_mul(const Quaternion& q, const QVector& phi) {
  // Standard basis: componentwise left multiplication.
  QVector out(phi.size());
  kernels::active().axpy_left(q, phi.entries.data(), out.entries.data(), phi.size());
  return out;
}

HilbertBasis gram_schmidt(const std::vector<QVector>& vs) {
  double max_norm = 0.0;
  for (const auto& v : vs) max_norm = std::max(max_norm, v.norm());
  if (max_norm == 0.0) throw EmptySpanError("gram_schmidt: no nonzero input vectors");
  const double drop = 1e-10 * max_norm;

  HilbertBasis out;
  for (const auto& v : vs) {
    QVector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : out.vectors) {
        const Quaternion c = inner(u, w);
        w = w - u * c;
      }
    }
    const double n = w.norm();
    if (n < drop) continue;
    out.vectors.push_back(w * Quaternion(1.0 / n));
  }
  if (out.vectors.empty()) throw EmptySpanError("gram_schmidt: span collapsed");
  return out;
}

QVector project(const std::vector<QVector>& basis_of_m, const QVector& phi) {
  HilbertBasis b{basis_of_m};
  if (!b.is_orthonormal()) throw BasisError("project: family is not orthonormal");
  QVector out(phi.size());
  for (const auto& u : basis_of_m) {
    const Quaternion c = inner(u, phi);
    kernels::active().axpy_right(c, u.entries.data(), out.entries.data(), out.size());
  }
  return out;
}

}  // namespace qspect
