#include <doctest.h>

#include "qspect/errors.hpp"
#include "qspect/parser.hpp"

using namespace qspect;
using Op = StructuredOperator;

TEST_CASE("atoms and powers") {
  const Op s3 = parse_expr("S^3");
  CHECK(s3.lower_band() == 3);
  CHECK(s3.upper_band() == 0);

  const Op sp = parse_expr("S'");
  CHECK(sp.kind() == Op::Kind::AdjointShift);

  const Op id = parse_expr("I");
  CHECK(id.kind() == Op::Kind::Identity);

  const Op q = parse_expr("q(1, 0, 0.5, -2)");
  REQUIRE(q.kind() == Op::Kind::Diagonal);
  CHECK(q.diagonal_spec().limit == Quaternion{1, 0, 0.5, -2});

  const Op half = parse_expr("0.5");
  REQUIRE(half.kind() == Op::Kind::Diagonal);
  CHECK(half.diagonal_spec().limit == Quaternion(0.5));
}

TEST_CASE("precedence: products bind tighter than sums, powers tighter still") {
  const QMatrix lhs = parse_expr("S + S' * S'").truncate_unchecked(6, 6);
  const QMatrix rhs =
      (Op::shift() + Op::adjoint_shift() * Op::adjoint_shift()).truncate_unchecked(6, 6);
  CHECK((lhs - rhs).frobenius_norm() == 0.0);

  const QMatrix p1 = parse_expr("S * S ^ 2").truncate_unchecked(8, 8);
  const QMatrix p2 = (Op::shift() * Op::shift().pow(2)).truncate_unchecked(8, 8);
  CHECK((p1 - p2).frobenius_norm() == 0.0);

  const QMatrix g1 = parse_expr("(S + S')^2").truncate_unchecked(8, 8);
  const QMatrix g2 = (Op::shift() + Op::adjoint_shift()).pow(2).truncate_unchecked(8, 8);
  CHECK((g1 - g2).frobenius_norm() == 0.0);
}

TEST_CASE("subtraction folds into a scaled sum") {
  const QMatrix m = parse_expr("I - S").truncate_unchecked(4, 4);
  QMatrix want = QMatrix::identity(4);
  for (std::size_t j = 0; j + 1 < 4; ++j) want.at(j + 1, j) = Quaternion(-1.0);
  CHECK((m - want).frobenius_norm() == 0.0);
}

TEST_CASE("environment lookups") {
  Environment env;
  env.diagonals["d1"] = {{Quaternion::i()}, Quaternion::one()};
  FiniteRankPatch p1;
  p1.pairs.push_back({{{0}, {Quaternion::one()}}, {{0}, {Quaternion::one()}}});
  env.patches["p1"] = p1;

  const Op expr = parse_expr("S * (I + F(p1)) - D(d1)", env);
  CHECK(expr.kind() == Op::Kind::Sum);

  CHECK_THROWS_AS(parse_expr("D(nope)", env), UnknownName);
  CHECK_THROWS_AS(parse_expr("F(nope)", env), UnknownName);
}

TEST_CASE("syntax errors carry the offending offset") {
  try {
    parse_expr("S + * I");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 4);
  }

  CHECK_THROWS_AS(parse_expr(""), SyntaxError);
  CHECK_THROWS_AS(parse_expr("S )"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("q(1,2,3)"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("S^"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("S S"), SyntaxError);
}
