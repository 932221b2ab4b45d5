#include "qspect/qmatrix.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "qspect/errors.hpp"
#include "qspect/kernels.hpp"

namespace qspect {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Quaternion::one();
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

double QMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& q : data_) acc += q.norm_sq();
  return std::sqrt(acc);
}

QVector apply(const QMatrix& a, const QVector& phi) {
  if (a.cols() != phi.size()) throw DimensionError("apply: dimension mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    out[i] = kernels::active().dot_mul(a.row_ptr(i), phi.entries.data(), a.cols());
  return out;
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j).conj();
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix sum: shape mismatch");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference: shape mismatch");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: shape mismatch");
  QMatrix out(a.rows(), b.cols());
  // C.row(i) += A_ik * B.row(k); the inner update is a contiguous axpy.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Quaternion& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      kernels::active().axpy_left(aik, b.row_ptr(k), out.row_ptr(i), b.cols());
    }
  return out;
}

QMatrix operator*(double s, const QMatrix& a) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) * s;
  return out;
}

QMatrix scalar_op(const Quaternion& q, const QMatrix& a, Side side, const HilbertBasis& basis) {
  if (!basis.is_orthonormal()) throw BasisError("scalar_op: basis is not orthonormal");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    QVector col(a.rows());
    if (side == Side::Left) {
      for (std::size_t i = 0; i < a.rows(); ++i) col[i] = a.at(i, j);
      col = left_mul(q, col, basis);
    } else {
      QVector ej(a.cols());
      ej[j] = Quaternion::one();
      col = apply(a, left_mul(q, ej, basis));
    }
    for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, j) = col[i];
  }
  return out;
}

QMatrix scalar_op(const Quaternion& q, const QMatrix& a, Side side) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = side == Side::Left ? q * a.at(i, j) : a.at(i, j) * q;
  return out;
}

Eigen::MatrixXcd chi(const QMatrix& a) {
  const auto r = static_cast<Eigen::Index>(a.rows());
  const auto c = static_cast<Eigen::Index>(a.cols());
  Eigen::MatrixXcd m(2 * r, 2 * c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) {
      const Quaternion& q = a.at(i, j);
      const std::complex<double> a1 = q.complex_a();
      const std::complex<double> a2 = q.complex_b();
      m(i, j) = a1;
      m(i, c + j) = a2;
      m(r + i, j) = -std::conj(a2);
      m(r + i, c + j) = std::conj(a1);
    }
  return m;
}

Eigen::VectorXcd embed_vector(const QVector& phi) {
  const auto n = static_cast<Eigen::Index>(phi.size());
  Eigen::VectorXcd w(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    w(k) = phi[k].complex_a();
    w(n + k) = -std::conj(phi[k].complex_b());
  }
  return w;
}

QVector unembed_vector(const Eigen::VectorXcd& w) {
  const auto n = w.size() / 2;
  QVector phi(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k)
    phi[k] = Quaternion::from_complex_pair(w(k), -std::conj(w(n + k)));
  return phi;
}

double op_norm(const QMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(chi(a));
  return svd.singularValues()(0);
}

RankKernel rank_kernel(const QMatrix& a, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(chi(a), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rel_tol * sv(0) : 0.0;
  int rank_c = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank_c;
  if (rank_c % 2 != 0)
    throw RankAmbiguous("rank_kernel: complex rank of chi(A) is odd at the cutoff");

  RankKernel out;
  out.rank = rank_c / 2;
  const int null_c = static_cast<int>(sv.size()) - rank_c;
  if (null_c == 0) return out;

  // The complex null space of chi(A) is closed under the antilinear
  // structure map, so the pulled-back vectors right-span the
  // quaternionic kernel; Gram-Schmidt reduces them to dimension
  // null_c / 2.
  std::vector<QVector> candidates;
  for (int t = 0; t < null_c; ++t)
    candidates.push_back(unembed_vector(svd.matrixV().col(rank_c + t)));
  HilbertBasis basis = gram_schmidt(candidates);
  out.kernel = std::move(basis.vectors);
  if (static_cast<int>(out.kernel.size()) != null_c / 2)
    throw RankAmbiguous("rank_kernel: quaternionic kernel dimension mismatch");
  return out;
}

QVector FiniteRankDecomp::apply(const QVector& phi) const {
  QVector out(u.empty() ? phi.size() : u.front().size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Quaternion c = inner(v[i], phi);
    kernels::active().axpy_right(c, u[i].entries.data(), out.entries.data(), out.size());
  }
  return out;
}

QVector FiniteRankDecomp::apply_adjoint(const QVector& psi) const {
  QVector out(v.empty() ? psi.size() : v.front().size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Quaternion c = inner(u[i], psi);
    kernels::active().axpy_right(c, v[i].entries.data(), out.entries.data(), out.size());
  }
  return out;
}

FiniteRankDecomp finite_rank_decomp(const QMatrix& a) {
  FiniteRankDecomp out;
  std::vector<QVector> columns;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    QVector col(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) col[i] = a.at(i, j);
    columns.push_back(std::move(col));
  }
  bool all_zero = true;
  for (const auto& c : columns)
    if (c.norm() > 0) all_zero = false;
  if (all_zero) return out;  // rank 0, empty decomposition

  HilbertBasis ran_basis = gram_schmidt(columns);
  const QMatrix adj = adjoint(a);
  for (auto& u : ran_basis.vectors) {
    out.v.push_back(apply(adj, u));
    out.u.push_back(std::move(u));
  }
  return out;
}

QMatrix neumann_inverse(const QMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw DimensionError("neumann_inverse: square matrix required");
  const double norm_a = op_norm(a);
  if (norm_a >= 1.0) throw NotContractive("neumann_inverse: op_norm(A) >= 1");
  QMatrix sum = QMatrix::identity(a.rows());
  QMatrix term = QMatrix::identity(a.rows());
  for (int k = 1; k <= 10000; ++k) {
    term = term * a;
    const double inc = op_norm(term);
    sum = sum + term;
    if (inc < tol) return sum;
    if (!std::isfinite(inc)) break;
  }
  throw NumericalError("neumann_inverse: series did not reach tolerance");
}

}  // namespace qspect
