#include "slagforge/model.hpp"
#include "slagforge/parse.hpp"

#include <doctest.h>

using namespace slagforge;

namespace {

Scalar lam() { return Scalar::param("lambda"); }
WeightedForm lit(const ModelManifold& m, const std::string& s) { return parse_form(s, m.context()); }

Vec basis_vec(std::initializer_list<std::pair<int, Scalar>> entries) {
  Vec v(6);
  for (auto& [t, c] : entries) v[size_t(t - 1)] = c;
  return v;
}

}  // namespace

TEST_CASE("structure equations of the builtins") {
  ModelManifold iw = builtin("iwasawa");
  CHECK(d(WeightedForm::theta(3), iw.frame()) == lit(iw, "-t[1,2] + t[4,5]"));
  CHECK(d(WeightedForm::theta(6), iw.frame()) == lit(iw, "t[2,4] - t[1,5]"));

  ModelManifold cs = builtin("nakamura_cs");
  CHECK(d(WeightedForm::theta(2), cs.frame()) == lit(cs, "-lambda*t[1,2]"));
  CHECK(d(WeightedForm::theta(5), cs.frame()) == lit(cs, "-lambda*t[1,5]"));

  ModelManifold cp = builtin("nakamura_cp");
  CHECK(d(WeightedForm::theta(2), cp.frame()) == lit(cp, "-t[1,2] + t[4,5]"));
}

TEST_CASE("brackets") {
  ModelManifold iw = builtin("iwasawa");
  auto b = brackets(iw);
  CHECK(b.at({0, 4}) == basis_vec({{6, Scalar(1)}}));
  CHECK(b.at({3, 4}) == basis_vec({{3, Scalar(-1)}}));
  CHECK(bracket_string(iw, 0, 4) == "[E1, E5] = E6");

  auto c = brackets(builtin("nakamura_cs"));
  CHECK(c.at({0, 1}) == basis_vec({{2, lam()}}));

  auto p = brackets(builtin("nakamura_cp"));
  CHECK(p.at({0, 1}) == basis_vec({{2, Scalar(1)}}));

  ModelManifold flat = ModelManifold::from_text(
      "name flat\nkind complex\ndim 6\nJ 1>4 2>5 3>6\nomega t[1,4] + t[2,5] + t[3,6]\nOmega p[1]*p[2]*p[3]\n");
  CHECK(brackets(flat).empty());
}

TEST_CASE("consistency of the builtins") {
  for (auto& name : builtin_names()) {
    ModelManifold m = builtin(name);
    ConsistencyReport r = consistency_report(m);
    const Check* dd = r.find("d^2 = 0");
    REQUIRE(dd);
    CHECK_MESSAGE(dd->pass, name);
    if (m.is_complex()) {
      CHECK_MESSAGE(r.all_pass(), name);
      CHECK(d(wedge(m.omega, m.omega), m.frame()).is_zero());
    }
  }
}

TEST_CASE("corrupted structure constants break d^2 = 0") {
  std::string src = builtin_source("nakamura_cp");
  auto at = src.find("f 2 1 2 = -1");
  REQUIRE(at != std::string::npos);
  src.replace(at, 12, "f 2 1 2 = 1");
  ModelManifold bad = ModelManifold::from_text(src);
  const Check* dd = consistency_report(bad).find("d^2 = 0");
  REQUIRE(dd);
  CHECK_FALSE(dd->pass);
}

TEST_CASE("model loading errors") {
  CHECK_THROWS_AS(builtin("bogus"), UnknownModel);
  CHECK_THROWS(ModelManifold::from_text("name x\ndim 6\nf 9 1 2 = 1\n"));
  CHECK_THROWS(ModelManifold::from_text("name x\ndim 6\nf 1 2 3 = lambda +\n"));
}

TEST_CASE("builtin sources parse back to the same model") {
  for (auto& name : builtin_names()) {
    ModelManifold a = builtin(name), b = ModelManifold::from_text(builtin_source(name));
    CHECK(a.structure == b.structure);
    CHECK(a.omega == b.omega);
    CHECK(a.Omega == b.Omega);
  }
}
