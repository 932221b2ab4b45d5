#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

#include "qspect/errors.hpp"

namespace qspect {

/// A quaternion q = q0 + q1*i + q2*j + q3*k with double components.
///
/// Multiplication follows the Hamilton rules i*j = k = -j*i, j*k = i,
/// k*i = j.  Values are plain aggregates; all operations are free of
/// side effects.
struct Quaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b, double c, double d)
      : q0(a), q1(b), q2(c), q3(d) {}
  /// Real quaternion.
  constexpr Quaternion(double a) : q0(a) {}

  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double re() const { return q0; }
  double abs_im() const { return std::sqrt(q1 * q1 + q2 * q2 + q3 * q3); }
  constexpr double norm_sq() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }
  double norm() const { return std::sqrt(norm_sq()); }

  constexpr bool is_zero() const { return q0 == 0 && q1 == 0 && q2 == 0 && q3 == 0; }

  constexpr Quaternion conj() const { return {q0, -q1, -q2, -q3}; }

  constexpr Quaternion operator-() const { return {-q0, -q1, -q2, -q3}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    q0 += o.q0; q1 += o.q1; q2 += o.q2; q3 += o.q3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    q0 -= o.q0; q1 -= o.q1; q2 -= o.q2; q3 -= o.q3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    q0 *= s; q1 *= s; q2 *= s; q3 *= s;
    return *this;
  }

  /// q = c1 + c2*j with c1 = q0 + q1*i, c2 = q2 + q3*i.  This is the
  /// splitting behind the complex adjoint embedding.
  std::complex<double> complex_a() const { return {q0, q1}; }
  std::complex<double> complex_b() const { return {q2, q3}; }
  static Quaternion from_complex_pair(std::complex<double> a, std::complex<double> b) {
    return {a.real(), a.imag(), b.real(), b.imag()};
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
          p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
          p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
          p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0};
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.q0 == b.q0 && a.q1 == b.q1 && a.q2 == b.q2 && a.q3 == b.q3;
}

inline Quaternion qmul(const Quaternion& p, const Quaternion& q) { return p * q; }

/// Inverse conj(q)/|q|^2.  Throws DivisionByZero on zero input.
inline Quaternion qinv(const Quaternion& q) {
  const double n2 = q.norm_sq();
  if (n2 == 0.0) throw DivisionByZero("qinv: zero quaternion has no inverse");
  return q.conj() * (1.0 / n2);
}

/// Similarity conjugation s^{-1} q s; preserves the sphere class of q.
inline Quaternion conjugate_by(const Quaternion& q, const Quaternion& s) {
  return qinv(s) * q * s;
}

/// Axially symmetric similarity class [q], stored canonically as the
/// real part and the imaginary radius.  rad = 0 marks a real point.
/// The canonical representative is re + rad*i.
struct SphereClass {
  double re = 0.0;
  double rad = 0.0;

  Quaternion representative() const { return {re, rad, 0, 0}; }

  bool contains(const Quaternion& p, double tol = 1e-12) const {
    const double scale = 1.0 + std::abs(re) + rad;
    return std::abs(p.re() - re) <= tol * scale && std::abs(p.abs_im() - rad) <= tol * scale;
  }
};

inline SphereClass sphere_rep(const Quaternion& q) { return {q.re(), q.abs_im()}; }

/// Lexicographic (re, rad) order used everywhere spheres are listed.
inline bool sphere_less(const SphereClass& a, const SphereClass& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.rad < b.rad;
}

/// Tolerant equality of quaternions, absolute tolerance scaled by magnitude.
inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
  const double scale = 1.0 + std::max(a.norm(), b.norm());
  return (a - b).norm() <= tol * scale;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qspect
