#include <doctest.h>

#include "qspect/errors.hpp"
#include "qspect/rng.hpp"
#include "qspect/s_spectrum.hpp"

using namespace qspect;

namespace {

QMatrix random_matrix(Rng& rng, std::size_t n) {
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rng.quaternion();
  return a;
}

}  // namespace

TEST_CASE("pseudo-resolvent closed forms") {
  const QMatrix id = QMatrix::identity(3);
  CHECK(pseudo_resolvent(id, Quaternion(1.0)).frobenius_norm() == 0.0);

  Rng rng(31);
  const QMatrix a = random_matrix(rng, 4);
  // Real q: R_q(A) = (A - qI)^2.
  const double r = 0.7;
  QMatrix shifted = a;
  for (std::size_t i = 0; i < 4; ++i) shifted.at(i, i) -= Quaternion(r);
  CHECK((pseudo_resolvent(a, Quaternion(r)) - shifted * shifted).frobenius_norm() < 1e-12);
  // Dependence only on (Re q, |q|): q and its conjugate agree.
  const Quaternion q = rng.quaternion();
  CHECK((pseudo_resolvent(a, q) - pseudo_resolvent(a, q.conj())).frobenius_norm() == 0.0);
}

TEST_CASE("point spectrum of diagonal and nilpotent matrices") {
  const auto d12 = point_spectrum(QMatrix::diagonal({Quaternion(1.0), Quaternion(2.0)}));
  REQUIRE(d12.size() == 2);
  CHECK(d12[0].first.re == doctest::Approx(1.0));
  CHECK(d12[0].first.rad == 0.0);
  CHECK(d12[0].second == 1);
  CHECK(d12[1].first.re == doctest::Approx(2.0));

  // diag(i, j): both entries lie on the sphere (0, 1).
  const auto dij = point_spectrum(QMatrix::diagonal({Quaternion::i(), Quaternion::j()}));
  REQUIRE(dij.size() == 1);
  CHECK(dij[0].first.re == doctest::Approx(0.0));
  CHECK(dij[0].first.rad == doctest::Approx(1.0));
  CHECK(dij[0].second == 2);

  QMatrix nil(2, 2);
  nil.at(0, 1) = Quaternion::one();
  const auto n = point_spectrum(nil);
  REQUIRE(n.size() == 1);
  CHECK(n[0].first.re == 0.0);
  CHECK(n[0].first.rad == 0.0);
  CHECK(n[0].second == 2);
}

TEST_CASE("mu witness values") {
  const QMatrix id = QMatrix::identity(2);
  CHECK(mu(id, Quaternion(1.0)) < 1e-12);
  CHECK(mu(id, Quaternion(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
  const QMatrix dij = QMatrix::diagonal({Quaternion::i(), Quaternion::j()});
  CHECK(mu(dij, Quaternion::i()) < 1e-10);
}

TEST_CASE("classification at and away from the spectrum") {
  const QMatrix id = QMatrix::identity(2);
  const Classification at = classify(id, Quaternion(1.0), 1e-8);
  CHECK(at.point);
  CHECK(at.approximate);
  CHECK(at.compression);
  CHECK_FALSE(at.resolvent);

  const Classification away = classify(id, Quaternion{0, 2, 0, 0}, 1e-8);
  CHECK_FALSE(away.point);
  CHECK(away.resolvent);
  CHECK(away.mu_value == doctest::Approx(5.0).epsilon(1e-12));

  CHECK_THROWS_AS(classify(id, Quaternion(1.0), 0.0), DimensionError);
}

TEST_CASE("every eigen-sphere carries the approximate flag") {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = random_matrix(rng, 1 + rng.below(4));
    const SpectrumReport report = spectrum_report(a);
    CHECK(report.residual_empty);
    CHECK(report.continuous_empty);
    CHECK_FALSE(report.spheres.empty());
    for (const auto& e : report.spheres) {
      CHECK(e.point);
      CHECK(e.approximate);
      CHECK(e.compression);
    }
  }
}

TEST_CASE("scan grid layout and input validation") {
  const QMatrix id = QMatrix::identity(1);
  const ScanField f = scan(id, 0.0, 2.0, 1.0, 21, 11);
  CHECK(f.re.size() == 21);
  CHECK(f.rad.size() == 11);
  CHECK(f.mu.size() == 21 * 11);
  // Unique zero cell at (1, 0); everything else positive.
  int zero_cells = 0;
  for (std::size_t t = 0; t < f.mu.size(); ++t) {
    CHECK(f.mu[t] >= 0.0);
    if (f.mu[t] < 1e-8) {
      ++zero_cells;
      CHECK(f.re[t / f.rad.size()] == doctest::Approx(1.0));
      CHECK(f.rad[t % f.rad.size()] == doctest::Approx(0.0));
    }
  }
  CHECK(zero_cells == 1);

  CHECK_THROWS_AS(scan(id, 0.0, 1.0, 1.0, 1, 5), DimensionError);
  CHECK_THROWS_AS(scan(id, 0.0, 1.0, -1.0, 5, 5), DimensionError);
}
