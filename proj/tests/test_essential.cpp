#include <doctest.h>

#include "qspect/errors.hpp"
#include "qspect/essential.hpp"
#include "qspect/rng.hpp"

using namespace qspect;
using Op = StructuredOperator;

TEST_CASE("shift verdicts inside, on, and outside the unit sphere") {
  const Op s = Op::shift();

  const EssentialVerdict inside = is_fredholm_at(s, Quaternion{0.3, 0.4, 0, 0});
  CHECK_FALSE(inside.in_sigma_e);
  CHECK(inside.k == -2);

  const EssentialVerdict on = is_fredholm_at(s, Quaternion{0.6, 0, 0.8, 0});
  CHECK(on.in_sigma_e);
  CHECK_FALSE(on.k.has_value());

  const EssentialVerdict outside = is_fredholm_at(s, Quaternion{0.9, 0, 0, 1.2});
  CHECK_FALSE(outside.in_sigma_e);
  CHECK(outside.resolvent);
}

TEST_CASE("verdicts depend on q only through its sphere class") {
  const Op s = Op::shift();
  Rng rng(61);
  for (double radius : {0.5, 1.0, 1.6}) {
    const double c = 0.3;
    const double im = radius * std::sqrt(1 - c * c);
    const Quaternion a = Quaternion{radius * c, im, 0, 0};
    const Quaternion b = Quaternion{radius * c, 0, 0, 0} + rng.imaginary_unit() * im;
    const Partition pa = sigma_partition_at(s, a);
    const Partition pb = sigma_partition_at(s, b);
    CHECK(pa.kind == pb.kind);
    if (pa.kind == PartitionKind::SigmaK) CHECK(pa.k == pb.k);
  }
}

TEST_CASE("essential spectrum is adjoint symmetric at samples") {
  const Op s = Op::shift();
  const Op sp = s.adjoint();
  for (double radius : {0.5, 1.0, 1.6}) {
    const Quaternion q{0.4 * radius, 0.916515138991168 * radius, 0, 0};
    CHECK(is_fredholm_at(s, q).in_sigma_e == is_fredholm_at(sp, q.conj()).in_sigma_e);
  }
}

TEST_CASE("effectively finite operators have empty essential spectrum at samples") {
  // Identity beyond a finite prefix: every R_q is Fredholm.
  const Op t = Op::diagonal({{Quaternion::i(), Quaternion(2.0)}, Quaternion::one()});
  for (double re : {0.0, 1.0, 2.0}) {
    const EssentialVerdict v = is_fredholm_at(t, Quaternion{re, 0.5, 0, 0});
    CHECK_FALSE(v.in_sigma_e);
  }
}

TEST_CASE("compact perturbations leave the essential verdicts alone") {
  const Op s = Op::shift();
  FiniteRankPatch patch;
  patch.pairs.push_back({{{0, 2}, {Quaternion::i(), Quaternion(0.7)}},
                         {{1}, {Quaternion::j()}}});
  const Op f = Op::finite_rank(patch);

  const std::vector<Quaternion> samples{{0.3, 0.4, 0, 0}, {0.6, 0.8, 0, 0}, {0.9, 1.2, 0, 0}};
  const EssentialComparison cmp = compare_essential(s, f, samples);
  CHECK(cmp.samples == 3);
  CHECK(cmp.agreements == 3);
  CHECK(cmp.disagreements.empty());

  // K = 0 is trivially fine.
  const Op zero = Op::scalar(Quaternion::zero());
  CHECK(compare_essential(s, zero, samples).agreements == 3);

  // The identity is not compact.
  CHECK_THROWS_AS(compare_essential(s, Op::identity(), samples), NonCompactPerturbation);
}

TEST_CASE("essential membership implies non-resolvent") {
  const Op s = Op::shift();
  for (double radius : {0.4, 0.8, 1.0, 1.3}) {
    const EssentialVerdict v = is_fredholm_at(s, Quaternion{0.5 * radius, 0.866 * radius, 0, 0});
    if (v.in_sigma_e) CHECK_FALSE(v.resolvent);
  }
}
