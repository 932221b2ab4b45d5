#include <doctest.h>

#include "qspect/errors.hpp"
#include "qspect/rng.hpp"
#include "qspect/rq_space.hpp"

using namespace qspect;

namespace {

QVector random_vec(Rng& rng, std::size_t n, double scale = 1.0) {
  QVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.quaternion(scale);
  return v;
}

}  // namespace

TEST_CASE("inner product axioms on random data") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const QVector u = random_vec(rng, n), v = random_vec(rng, n), w = random_vec(rng, n);
    const Quaternion q = rng.quaternion();

    // Conjugate symmetry and right linearity in the second slot.
    CHECK(approx_equal(inner(u, v).conj(), inner(v, u)));
    CHECK(approx_equal(inner(u, v * q), inner(u, v) * q));
    CHECK(approx_equal(inner(u, v + w), inner(u, v) + inner(u, w)));
    // Scalars leave the first slot conjugated: <u q|v> = conj(q) <u|v>.
    CHECK(approx_equal(inner(u * q, v), q.conj() * inner(u, v)));
    // Positivity.
    CHECK(inner(u, u).re() >= 0);
    CHECK(inner(u, u).abs_im() < 1e-12 * (1 + u.norm_sq()));
  }
}

TEST_CASE("standard-basis left multiplication is componentwise") {
  Rng rng(12);
  const std::size_t n = 5;
  const QVector phi = random_vec(rng, n);
  const Quaternion q = rng.quaternion();
  const QVector via_basis = left_mul(q, phi, HilbertBasis::standard(n));
  const QVector direct = left_mul(q, phi);
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(approx_equal(via_basis[k], q * phi[k]));
    CHECK(approx_equal(direct[k], q * phi[k]));
  }
}

TEST_CASE("left multiplication composes like the algebra") {
  Rng rng(13);
  const QVector phi = random_vec(rng, 4);
  const Quaternion p = rng.quaternion(), q = rng.quaternion();
  const QVector lhs = left_mul(p, left_mul(q, phi));
  const QVector rhs = left_mul(p * q, phi);
  CHECK((lhs - rhs).norm() < 1e-12 * (1 + rhs.norm()));
}

TEST_CASE("left multiplication in a rotated basis differs but stays isometric") {
  Rng rng(14);
  const std::size_t n = 3;
  HilbertBasis basis = gram_schmidt({random_vec(rng, n), random_vec(rng, n), random_vec(rng, n)});
  REQUIRE(basis.count() == n);
  const QVector phi = random_vec(rng, n);
  const Quaternion q = rng.unit_quaternion();
  const QVector rotated = left_mul(q, phi, basis);
  CHECK(std::abs(rotated.norm() - phi.norm()) < 1e-10 * (1 + phi.norm()));
}

TEST_CASE("gram_schmidt produces an orthonormal right basis and drops dependents") {
  Rng rng(15);
  const std::size_t n = 5;
  const QVector a = random_vec(rng, n), b = random_vec(rng, n);
  // Third vector is a right combination of the first two.
  const QVector c = a * rng.quaternion() + b * rng.quaternion();
  const HilbertBasis basis = gram_schmidt({a, b, c});
  CHECK(basis.count() == 2);
  CHECK(basis.is_orthonormal());
}

TEST_CASE("gram_schmidt of nothing but zeros throws") {
  CHECK_THROWS_AS(gram_schmidt({QVector(3), QVector(3)}), EmptySpanError);
}

TEST_CASE("projection is idempotent and contractive") {
  Rng rng(16);
  const std::size_t n = 6;
  const HilbertBasis basis = gram_schmidt({random_vec(rng, n), random_vec(rng, n)});
  const QVector phi = random_vec(rng, n);
  const QVector p1 = project(basis.vectors, phi);
  const QVector p2 = project(basis.vectors, p1);
  CHECK((p1 - p2).norm() < 1e-10 * (1 + p1.norm()));
  CHECK(p1.norm() <= phi.norm() + 1e-12);
}

TEST_CASE("projection onto a non-orthonormal family is rejected") {
  Rng rng(17);
  const QVector a = random_vec(rng, 4, 2.0);
  CHECK_THROWS_AS(project({a, a}, random_vec(rng, 4)), BasisError);
}

TEST_CASE("dimension mismatches are rejected") {
  Rng rng(18);
  CHECK_THROWS_AS(inner(random_vec(rng, 3), random_vec(rng, 4)), DimensionError);
  CHECK_THROWS_AS(random_vec(rng, 3) + random_vec(rng, 2), DimensionError);
}
