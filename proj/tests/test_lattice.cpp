#include "slagforge/lattice.hpp"

#include <doctest.h>

#include <cmath>

using namespace slagforge;

namespace {

IntMat2 mat(long a, long b, long c, long d) { return IntMat2{{{a, b}, {c, d}}}; }

// brute force over integer columns: P·v has a vanishing entry only when v = 0
bool float_witness(const IntMat2& M, int bound) {
  double tr = double(M[0][0] + M[1][1]);
  double disc = std::sqrt(tr * tr - 4.0);
  double ev[2] = {(tr + disc) / 2, (tr - disc) / 2};
  for (double l : ev) {
    // left eigenvector (1, y): (M[0][0] - l) + y·M[1][0] = 0
    double y = (l - double(M[0][0])) / double(M[1][0]);
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b)
        if ((a || b) && std::abs(a + y * b) < 1e-9) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("eigen data") {
  EigenData e = eigen_data(mat(2, 3, 1, 2));
  CHECK(e.expanding == QuadInt(Rational(2), Rational(1), 3));
  CHECK(e.contracting == QuadInt(Rational(2), Rational(-1), 3));
  CHECK(e.irrational);
  CHECK_FALSE(e.discriminant.perfect_square);

  // characteristic polynomial x² - 3x + 1
  EigenData f = eigen_data(mat(2, 1, 1, 1));
  for (const QuadInt& x : {f.expanding, f.contracting}) CHECK((x * x - QuadInt(3) * x + QuadInt(1)).is_zero());
  CHECK(f.expanding == QuadInt(Rational(3, 2), Rational(1, 2), 5));

  CHECK_THROWS(eigen_data(mat(1, 0, 0, 1)));
  CHECK(parse_int_mat2("2,3,1,2") == mat(2, 3, 1, 2));
  CHECK_THROWS(parse_int_mat2("2,3,1"));
}

TEST_CASE("left eigenvectors diagonalize M") {
  for (IntMat2 M : {mat(2, 3, 1, 2), mat(2, 1, 1, 1), mat(3, 2, 1, 1)}) {
    EigenData e = eigen_data(M);
    QuadMat2 D = mul(mul(e.P, to_quad(M)), inverse(e.P));
    CHECK(D[0][1].is_zero());
    CHECK(D[1][0].is_zero());
    CHECK(D[0][0] == e.expanding);
    CHECK(D[1][1] == e.contracting);
  }
}

TEST_CASE("no integer matrix diagonalized by P") {
  for (IntMat2 M : {mat(2, 3, 1, 2), mat(2, 1, 1, 1)}) {
    SearchResult s = diag_integer_matrix_search(M, 50);
    CHECK_FALSE(s.witness);
    CHECK(s.witness.has_value() == float_witness(M, 50));
  }
  CHECK_FALSE(diag_integer_matrix_search(mat(2, 3, 1, 2), 0).witness);
}

TEST_CASE("lattice bundle") {
  IntMat2 M = mat(2, 3, 1, 2);
  EigenData e = eigen_data(M);
  CHECK(verify_lattice_bundle(M, e.P).ok);
  QuadMat2 bad = e.P;
  bad[0][0] += QuadInt(1);
  CHECK_FALSE(verify_lattice_bundle(M, bad).ok);
  QuadMat2 id{{{QuadInt(1), QuadInt(0)}, {QuadInt(0), QuadInt(1)}}};
  CHECK(verify_lattice_bundle(mat(1, 0, 0, 1), id).ok);
  CHECK(verify_lattice_bundle(builtin("nakamura_cs_mirror")).ok);
}

TEST_CASE("torus conjugation") {
  IntMat2 M = mat(2, 3, 1, 2);
  for (int a = 0; a <= 3; ++a) CHECK(verify_torus_conjugation(M, a));
  // e^{3λ} from the characteristic polynomial: (2+√3)³ = 26 + 15√3
  CHECK(eigen_data(M).expanding.pow(3) == QuadInt(Rational(26), Rational(15), 3));
}

TEST_CASE("closure of leaves") {
  ModelManifold cs = builtin("nakamura_cs");
  CHECK(classify_leaf_closure(cs, "L123").str() == "closed_iff {B = C = 0}");
  CHECK(classify_leaf_closure(cs, "L156").str() == "closed_iff {A = B = 0}");
  for (auto id : {"L246", "L345", "L135", "L126"})
    CHECK(classify_leaf_closure(cs, id).kind == ClosureVerdict::Kind::NeverClosed);
  for (auto id : {"L234", "L456"}) CHECK(classify_leaf_closure(cs, id).kind == ClosureVerdict::Kind::AlwaysClosed);
  CHECK_THROWS_AS(classify_leaf_closure(cs, "L999"), DomainError);
}

TEST_CASE("characters on the lattice") {
  ModelManifold cs = builtin("nakamura_cs");
  int y = 1;
  REQUIRE(cs.direction_names[size_t(y)] == "y");
  Scalar il = Scalar::i() * Scalar::param("lambda");
  CHECK(character_trivial(Character::along(y, il), cs));
  CHECK(character_trivial(Character(), cs));
  CHECK_FALSE(character_trivial(Character::along(0, Scalar::param("lambda")), cs));
  CHECK_FALSE(character_trivial(Character::along(y, il), builtin("nakamura_cs_mirror")));
  ModelManifold half = cs;
  half.lattice.tau.q_tau = Rational(1, 2);
  CHECK_FALSE(character_trivial(Character::along(y, il), half));
  CHECK(character_trivial(Character::along(y, Scalar(2) * il), half));
}
