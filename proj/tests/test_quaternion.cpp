#include <doctest.h>

#include "qspect/quaternion.hpp"
#include "qspect/rng.hpp"

using namespace qspect;

TEST_CASE("hamilton multiplication table") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * j == -i);
  CHECK(k * i == j);
  CHECK(i * k == -j);
  CHECK(i * i == Quaternion(-1.0));
  CHECK(j * j == Quaternion(-1.0));
  CHECK(k * k == Quaternion(-1.0));
}

TEST_CASE("product norm and conjugation are multiplicative") {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const Quaternion p = rng.quaternion(2.0), q = rng.quaternion(2.0);
    CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) < 1e-12 * (1 + p.norm() * q.norm()));
    CHECK(approx_equal((p * q).conj(), q.conj() * p.conj()));
  }
}

TEST_CASE("inverse and division by zero") {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    Quaternion q = rng.quaternion();
    if (q.norm() < 1e-6) continue;
    CHECK(approx_equal(q * qinv(q), Quaternion::one()));
    CHECK(approx_equal(qinv(q) * q, Quaternion::one()));
  }
  CHECK_THROWS_AS(qinv(Quaternion{}), DivisionByZero);
}

TEST_CASE("conjugation preserves the sphere class") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = rng.quaternion(2.0);
    const Quaternion s = rng.unit_quaternion();
    const Quaternion c = conjugate_by(q, s);
    CHECK(std::abs(c.re() - q.re()) < 1e-12 * (1 + q.norm()));
    CHECK(std::abs(c.abs_im() - q.abs_im()) < 1e-12 * (1 + q.norm()));
    CHECK(sphere_rep(q).contains(c, 1e-10));
  }
}

TEST_CASE("complex pair splitting round-trips") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const Quaternion q = rng.quaternion(3.0);
    CHECK(Quaternion::from_complex_pair(q.complex_a(), q.complex_b()) == q);
  }
}

TEST_CASE("sphere ordering is lexicographic in (re, rad)") {
  CHECK(sphere_less({0, 1}, {1, 0}));
  CHECK(sphere_less({1, 0}, {1, 2}));
  CHECK_FALSE(sphere_less({1, 2}, {1, 2}));
}
