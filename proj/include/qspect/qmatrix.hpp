#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

#include "qspect/rq_space.hpp"

namespace qspect {

/// Right linear operator H^c -> H^r as a quaternionic matrix, row
/// major.  Entries multiply vector components from the left,
/// (A phi)_i = sum_j A_ij phi_j, which makes the action right linear.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const std::vector<Quaternion>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Quaternion& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Quaternion& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Quaternion* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const Quaternion* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

QVector apply(const QMatrix& a, const QVector& phi);

/// Conjugate transpose; the unique operator with <psi|A phi> = <A' psi|phi>.
QMatrix adjoint(const QMatrix& a);

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(double s, const QMatrix& a);

enum class Side { Left, Right };

/// Operator scalar multiplications (qA) phi = q (A phi) and
/// (Aq) phi = A (q phi), with the left action induced by the basis.
QMatrix scalar_op(const Quaternion& q, const QMatrix& a, Side side, const HilbertBasis& basis);

/// scalar_op with the standard basis: entrywise q*A_ij (left) or A_ij*q (right).
QMatrix scalar_op(const Quaternion& q, const QMatrix& a, Side side);

/// Complex adjoint embedding.  Writing A = A1 + A2*j with complex
/// blocks, chi(A) = [[A1, A2], [-conj(A2), conj(A1)]], a 2r x 2c
/// complex matrix.  chi is multiplicative and compatible with
/// adjoints; ranks and singular values of chi(A) come in pairs.
Eigen::MatrixXcd chi(const QMatrix& a);

/// Embedding of vectors matching chi: phi = phi1 + phi2*j maps to
/// (phi1, -conj(phi2)), so chi(A) * embed(phi) = embed(A phi).
Eigen::VectorXcd embed_vector(const QVector& phi);
QVector unembed_vector(const Eigen::VectorXcd& w);

/// Operator norm = largest singular value of chi(A).
double op_norm(const QMatrix& a);

struct RankKernel {
  int rank = 0;
  std::vector<QVector> kernel;  // orthonormal
};

/// Quaternionic rank and kernel via the complex embedding.  Singular
/// values of chi below rel_tol * sigma_max count as zero; the surviving
/// count must be even (RankAmbiguous otherwise) and the quaternionic
/// rank is half of it.
RankKernel rank_kernel(const QMatrix& a, double rel_tol = 1e-10);

/// Finite rank form A phi = sum_i u_i <v_i|phi> with u_i an
/// orthonormal basis of ran(A) and v_i = A' u_i, so that
/// A' psi = sum_i v_i <u_i|psi>.
struct FiniteRankDecomp {
  std::vector<QVector> u;
  std::vector<QVector> v;

  QVector apply(const QVector& phi) const;
  QVector apply_adjoint(const QVector& psi) const;
};

FiniteRankDecomp finite_rank_decomp(const QMatrix& a);

/// Inverse of I - A by geometric series, summed until the increment
/// norm drops below tol.  Requires op_norm(A) < 1 (NotContractive
/// otherwise); capped at 10000 terms as a divergence guard.
QMatrix neumann_inverse(const QMatrix& a, double tol);

}  // namespace qspect
