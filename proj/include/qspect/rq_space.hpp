#pragma once

#include <cstddef>
#include <vector>

#include "qspect/quaternion.hpp"

namespace qspect {

/// Vector in the finite-dimensional right quaternionic Hilbert space
/// H^n.  Scalars act on the right: (phi*q)_k = phi_k * q.
struct QVector {
  std::vector<Quaternion> entries;

  QVector() = default;
  explicit QVector(std::size_t n) : entries(n) {}
  QVector(std::initializer_list<Quaternion> init) : entries(init) {}

  std::size_t size() const { return entries.size(); }
  Quaternion& operator[](std::size_t i) { return entries[i]; }
  const Quaternion& operator[](std::size_t i) const { return entries[i]; }

  double norm_sq() const;
  double norm() const;
};

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);

/// Right scalar action phi * q.
QVector operator*(const QVector& phi, const Quaternion& q);

/// <phi|psi> = sum_k conj(phi_k) psi_k.  Conjugate linear in the first
/// slot, right linear in the second.
Quaternion inner(const QVector& phi, const QVector& psi);

/// Orthonormal set spanning (a subspace of) H^n.
struct HilbertBasis {
  std::vector<QVector> vectors;

  std::size_t count() const { return vectors.size(); }
  bool is_orthonormal(double tol = 1e-10) const;

  /// Standard basis e_0..e_{n-1}.
  static HilbertBasis standard(std::size_t n);
};

/// Basis-induced left scalar multiplication
///   q phi = sum_k phi_k * q * <phi_k|phi>.
/// With the standard basis this reduces to componentwise left
/// multiplication.  Throws BasisError for a non-orthonormal basis.
QVector left_mul(const Quaternion& q, const QVector& phi, const HilbertBasis& basis);

/// left_mul with the standard basis of the ambient space.
QVector left_mul(const Quaternion& q, const QVector& phi);

/// Modified Gram-Schmidt with right-quaternionic coefficients and one
/// re-orthogonalization pass.  Vectors whose post-projection norm drops
/// below 1e-10 times the largest input norm are dropped, so the output
/// count is the right rank of the span.  Throws EmptySpanError when
/// nothing survives.
HilbertBasis gram_schmidt(const std::vector<QVector>& vs);

/// Orthogonal projection P_M phi = sum u_k <u_k|phi> onto the span of
/// an orthonormal family.  Throws BasisError if the family is not
/// orthonormal.
QVector project(const std::vector<QVector>& basis_of_m, const QVector& phi);

}  // namespace qspect
