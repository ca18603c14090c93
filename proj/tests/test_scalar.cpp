#include "slagforge/linalg.hpp"
#include "slagforge/parse.hpp"
#include "slagforge/quadint.hpp"

#include <doctest.h>

using namespace slagforge;

namespace {
Scalar lam() { return Scalar::param("lambda"); }
}  // namespace

TEST_CASE("rational functions reduce to lowest terms") {
  CHECK(parse_scalar("(2*lambda)/2") == lam());
  CHECK(parse_scalar("(lambda^2 - lambda)/lambda") == lam() - Scalar(1));
  CHECK(parse_scalar("0/lambda").is_zero());
  CHECK((lam() * lam() - Scalar(1)) / (lam() + Scalar(1)) == lam() - Scalar(1));
  CHECK(Scalar::rational(-4, 4) == Scalar(-1));
  CHECK(Scalar::rational(6, -4) == parse_scalar("-3/2"));
}

TEST_CASE("gaussian coefficients and conjugation") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1) + i).conj() == Scalar(1) - i);
  CHECK((Scalar(1) + i).inverse() == (Scalar(1) - i) / Scalar(2));
  CHECK(parse_scalar("(1+i)*(1-i)") == Scalar(2));
  CHECK(lam().conj() == lam());
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), MalformedScalar);
  CHECK_THROWS(parse_scalar("1/(lambda - lambda)"));
}

TEST_CASE("malformed scalar text is a parse error") {
  CHECK_THROWS(parse_scalar("2 +* lambda"));
  CHECK_THROWS(parse_scalar("(lambda"));
}

TEST_CASE("evaluation is a ring homomorphism") {
  Scalar a = parse_scalar("(lambda^2 + 3)/(lambda - 1)"), b = parse_scalar("lambda + i");
  std::vector<GaussRational> at(size_t(ParamRegistry::count()), GaussRational(0));
  at[size_t(ParamRegistry::index("lambda"))] = GaussRational(Rational(5, 3));
  auto ea = a.eval(at), eb = b.eval(at), eab = (a * b).eval(at);
  REQUIRE(ea);
  REQUIRE(eb);
  REQUIRE(eab);
  CHECK(*eab == *ea * *eb);
}

TEST_CASE("square detection") {
  auto twelve = quad_sqrt_check(Integer(12));
  CHECK_FALSE(twelve.perfect_square);
  CHECK(twelve.D == 3);
  CHECK(twelve.square_part == 2);
  auto zero = quad_sqrt_check(Integer(0));
  CHECK(zero.perfect_square);
  CHECK(zero.root == 0);
  auto fortynine = quad_sqrt_check(Integer(49));
  CHECK(fortynine.perfect_square);
  CHECK(fortynine.root == 7);
}

TEST_CASE("quadratic integers") {
  QuadInt u(Rational(2), Rational(1), 3), v = u.conj();
  CHECK(u * v == QuadInt(1));
  CHECK(u + v == QuadInt(4));
  CHECK(u.pow(2) == QuadInt(Rational(7), Rational(4), 3));
  CHECK(u.inverse() == v);
  CHECK(u.sign() > 0);
  CHECK(QuadInt(Rational(1), Rational(-1), 2).sign() < 0);
}

TEST_CASE("exact rank and nullspace") {
  Scalar l = lam();
  Mat m{{l, Scalar(1), Scalar(0)}, {l * l, l, Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}};
  CHECK(rank(m) == 2);
  CHECK(rank_fraction_free(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  for (auto& row : m) {
    Scalar s;
    for (size_t k = 0; k < 3; ++k) s += row[k] * ns[0][k];
    CHECK(s.is_zero());
  }
  // rank drops only on a special fibre
  Mat n{{l - Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1)}};
  CHECK(rank(n) == 2);
}
