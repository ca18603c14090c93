#include "slagforge/parse.hpp"
#include "slagforge/slag.hpp"

#include <doctest.h>

#include <random>

using namespace slagforge;

namespace {

std::vector<std::string> names(const std::vector<ScanHit>& hits) {
  std::vector<std::string> out;
  for (auto& h : hits) out.push_back(triple_name(h.triple));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("axis scan") {
  for (auto name : {"iwasawa", "nakamura_cs", "nakamura_cp"}) {
    ModelManifold m = builtin(name);
    CHECK(names(scan_axis(m, Phase::Zero)) == std::vector<std::string>{"123", "156", "246", "345"});
    CHECK(names(scan_axis(m, Phase::MinusHalfPi)) == std::vector<std::string>{"126", "135", "234", "456"});
  }
  for (auto& h : scan_axis(builtin("iwasawa"), Phase::Zero)) CHECK(h.involutivity.involutive);
}

TEST_CASE("printed polynomial system") {
  SlagSystem s = build_system(builtin("iwasawa"), Phase::Zero);
  CHECK(s.equations[0] == parse_scalar("x1*x10 - x4*x7 + x2*x11 - x5*x8 + x3*x12 - x6*x9"));
  // degrees 2, 2, 2, 3
  std::vector<GaussRational> at(size_t(ParamRegistry::count()), GaussRational(0));
  for (int v = 0; v < 18; ++v) at[size_t(s.variables[size_t(v)])] = GaussRational(2);
  int degs[4] = {2, 2, 2, 3};
  for (int e = 0; e < 4; ++e) {
    // homogeneity: scaling every variable by 2 scales the value by 2^deg
    std::vector<GaussRational> one(at.size(), GaussRational(0));
    for (int v = 0; v < 18; ++v) one[size_t(s.variables[size_t(v)])] = GaussRational(1);
    auto a = s.equations[size_t(e)].eval(one), b = s.equations[size_t(e)].eval(at);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*b == *a * GaussRational(1L << degs[e]));
  }
}

TEST_CASE("phase -pi/2 calibration is Re Omega") {
  ModelManifold iw = builtin("iwasawa");
  WeightedForm cal = calibration(iw, Phase::MinusHalfPi);
  CHECK(cal == iw.Omega.re());
  for (auto t : {"123", "156", "246", "345"}) CHECK_FALSE(cal.coeff(mask_of({t[0] - '0', t[1] - '0', t[2] - '0'})).is_zero());
}

TEST_CASE("direct residuals on axis distributions") {
  ModelManifold iw = builtin("iwasawa");
  Residuals r = eval_direct(iw, Phase::Zero, DistributionMatrix::axis({1, 2, 3}));
  CHECK(r.zero());
  Residuals s = eval_direct(iw, Phase::Zero, DistributionMatrix::axis({1, 2, 4}));
  CHECK(s.values[0].is_zero());
  CHECK(s.values[1] == Scalar(1));
  CHECK(s.values[2].is_zero());
  CHECK(s.values[3].is_zero());
  DistributionMatrix zero;
  for (auto& row : zero.rows) row = Vec(6);
  Residuals z = eval_direct(iw, Phase::Zero, zero);
  CHECK(z.degenerate);
  CHECK(z.zero());
}

TEST_CASE("polynomial system agrees with direct evaluation on random distributions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  ModelManifold m = builtin("nakamura_cs");
  for (Phase p : {Phase::Zero, Phase::MinusHalfPi}) {
    SlagSystem s = build_system(m, p);
    for (int n = 0; n < 500; ++n) {
      DistributionMatrix a;
      for (auto& row : a.rows) {
        row = Vec(6);
        for (auto& x : row) x = Scalar(coef(rng));
      }
      Residuals x = eval_system(s, a), y = eval_direct(m, p, a);
      for (int e = 0; e < 4; ++e) CHECK(x.values[size_t(e)] == y.values[size_t(e)]);
    }
  }
}

TEST_CASE("involutivity") {
  ModelManifold iw = builtin("iwasawa");
  CHECK(involutive(iw, {1, 2, 3}).involutive);
  auto w = involutive(iw, {1, 2, 4});
  CHECK_FALSE(w.involutive);
  REQUIRE(w.witness);
  CHECK(*w.witness == std::pair<int, int>{0, 1});
  CHECK(w.witness_text == "[E1, E2] = E3");
  CHECK(involutive(builtin("nakamura_cs"), {2, 3, 4}).involutive);
}

TEST_CASE("phase and triple parsing") {
  CHECK(parse_phase("0") == Phase::Zero);
  CHECK(parse_phase("-pi/2") == Phase::MinusHalfPi);
  CHECK_THROWS_AS(parse_phase("pi"), ParseError);
  CHECK(parse_triple("1,5,6") == std::array<int, 3>{1, 5, 6});
  CHECK_THROWS_AS(parse_triple("1x6"), ParseError);
}
