#include <doctest.h>

#include "qspect/errors.hpp"
#include "qspect/fredholm.hpp"
#include "qspect/parser.hpp"
#include "qspect/rng.hpp"

using namespace qspect;
using Op = StructuredOperator;

namespace {

Op projection_complement() {
  // I - e0<e0|.
  FiniteRankPatch p;
  p.pairs.push_back({{{0}, {-Quaternion::one()}}, {{0}, {Quaternion::one()}}});
  return Op::identity() + Op::finite_rank(p);
}

}  // namespace

TEST_CASE("oracle kernel dimensions for shifts") {
  const KernelDims s = kernel_dims_oracle(Op::shift());
  CHECK(s.stabilized);
  CHECK(s.ker.dim == 0);
  CHECK(s.coker.dim == 1);

  const KernelDims s3 = kernel_dims_oracle(Op::shift().pow(3));
  CHECK(s3.stabilized);
  CHECK(s3.ker.dim == 0);
  CHECK(s3.coker.dim == 3);

  const KernelDims pc = kernel_dims_oracle(projection_complement());
  CHECK(pc.stabilized);
  CHECK(pc.ker.dim == 1);
  CHECK(pc.coker.dim == 1);
}

TEST_CASE("oracle reports non-stabilization for a decaying diagonal") {
  DiagonalSpec d;
  double v = 1.0;
  for (int i = 0; i < 12; ++i) {
    d.prefix.push_back(Quaternion(v));
    v *= 0.5;
  }
  d.limit = Quaternion::zero();
  const Op op = Op::diagonal(d);
  const KernelDims dims = kernel_dims_oracle(op);
  // Spectrum accumulates at zero: counts keep growing with the size.
  CHECK_FALSE(dims.stabilized);

  const FredholmData data = fredholm_data(op);
  CHECK(data.status == FredholmStatus::Neither);
}

TEST_CASE("symbolic index rewriting") {
  CHECK(index_symbolic(Op::shift()) == -1);
  CHECK(index_symbolic(Op::adjoint_shift()) == 1);
  CHECK(index_symbolic(Op::identity()) == 0);
  for (unsigned k = 1; k <= 5; ++k)
    CHECK(index_symbolic(Op::shift().pow(k)) == -static_cast<int>(k));
  CHECK(index_symbolic(Op::shift() * Op::adjoint_shift()) == 0);
  CHECK(index_symbolic(projection_complement()) == 0);

  // Rank-3 patch on top of a product keeps the product's index.
  Rng rng(51);
  FiniteRankPatch patch;
  for (int p = 0; p < 3; ++p)
    patch.pairs.push_back({{{rng.below(6)}, {rng.quaternion()}}, {{rng.below(6)}, {rng.quaternion()}}});
  CHECK(index_symbolic(Op::shift() * projection_complement()) == -1);
  CHECK(index_symbolic(Op::shift() + Op::finite_rank(patch)) == -1);

  // General sums without a dominant term stay undecided.
  CHECK_FALSE(index_symbolic(Op::shift() + Op::adjoint_shift()).has_value());
  // A compact tree has no index at all.
  CHECK_FALSE(index_symbolic(Op::finite_rank(patch)).has_value());
}

TEST_CASE("fredholm_data combines the two methods") {
  const FredholmData s = fredholm_data(Op::shift());
  CHECK(s.status == FredholmStatus::Fredholm);
  CHECK(s.dim_ker == 0);
  CHECK(s.dim_coker == 1);
  CHECK(s.index == -1);
  CHECK(s.method == FredholmMethod::BothAgree);

  // ind(A^) = -ind(A) across a few expressions.
  for (const char* text : {"S", "S^2", "S*S'", "S'*S'"}) {
    const Op op = parse_expr(text);
    const FredholmData d1 = fredholm_data(op);
    const FredholmData d2 = fredholm_data(op.adjoint());
    REQUIRE(d1.index.has_value());
    REQUIRE(d2.index.has_value());
    CHECK(*d1.index == -*d2.index);
  }
}

TEST_CASE("composition additivity on sampled product pairs") {
  Rng rng(52);
  std::vector<Op> pool{Op::shift(), Op::adjoint_shift(), Op::shift().pow(2),
                       Op::shift() * Op::adjoint_shift(),
                       Op::diagonal({{Quaternion(2.0)}, Quaternion::one()})};
  for (int t = 0; t < 10; ++t) {
    const Op& a = pool[rng.below(pool.size())];
    const Op& b = pool[rng.below(pool.size())];
    const FredholmData da = fredholm_data(a);
    const FredholmData db = fredholm_data(b);
    const FredholmData dab = fredholm_data(a * b);
    REQUIRE(da.index.has_value());
    REQUIRE(db.index.has_value());
    REQUIRE(dab.index.has_value());
    CHECK(*dab.index == *da.index + *db.index);
  }
}

TEST_CASE("compact diagonal eigen-equation has finite kernels away from zero") {
  // dim ker(qI - K) < inf for compact K and q != 0: oracle stabilizes
  // with a small finite count.
  DiagonalSpec d;
  for (int i = 0; i < 6; ++i) d.prefix.push_back(Quaternion(1.0 / (1 << i)));
  d.limit = Quaternion::zero();
  const Op k = Op::diagonal(d);
  Rng rng(53);
  for (int t = 0; t < 5; ++t) {
    const Quaternion q{rng.uniform(0.3, 2.0), 0, 0, 0};
    const Op shifted = Op::scalar(q) * Op::identity() - k;
    const KernelDims dims = kernel_dims_oracle(shifted);
    CHECK(dims.stabilized);
    CHECK(dims.ker.dim <= 1);
  }
}

TEST_CASE("parametrix certificates for shifts and diagonals") {
  const ParametrixResult ps = parametrix(Op::shift());
  CHECK(ps.approx_inverse.kind() == Op::Kind::AdjointShift);
  CHECK(ps.max_outside <= 1e-8);
  CHECK(ps.max_residual_st <= 1e-12);  // S'S = I exactly

  const ParametrixResult ps2 = parametrix(Op::shift().pow(2));
  CHECK(ps2.max_outside <= 1e-8);

  const Op d = Op::diagonal({{Quaternion::i() * 2.0, Quaternion(0.5)}, Quaternion::j()});
  const ParametrixResult pd = parametrix(d);
  CHECK(pd.max_residual_st <= 1e-12);
  CHECK(pd.max_residual_ts <= 1e-12);

  CHECK_THROWS_AS(parametrix(Op::shift() + Op::adjoint_shift()), UnsupportedShape);
  CHECK_THROWS_AS(parametrix(Op::diagonal({{}, Quaternion::zero()})), NotFredholm);
}

TEST_CASE("weyl predicate") {
  CHECK(is_weyl(projection_complement()));
  CHECK(is_weyl(Op::shift() * Op::adjoint_shift()));
  CHECK_FALSE(is_weyl(Op::shift()));
}
