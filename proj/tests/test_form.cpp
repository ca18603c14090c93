#include "oracle.hpp"

#include "slagforge/form.hpp"
#include "slagforge/model.hpp"
#include "slagforge/parse.hpp"

#include <doctest.h>

using namespace slagforge;

namespace {

WeightedForm th(int i) { return WeightedForm::theta(i); }
WeightedForm lit(const ModelManifold& m, const std::string& s) { return parse_form(s, m.context()); }

Vec e(int i, int dim = 6) {
  Vec v(static_cast<size_t>(dim), Scalar(0));
  v[size_t(i - 1)] = Scalar(1);
  return v;
}

}  // namespace

TEST_CASE("exterior derivative of coframe elements") {
  ModelManifold iw = builtin("iwasawa");
  CHECK(d(th(3), iw.frame()) == lit(iw, "-t[1,2] + t[4,5]"));
  CHECK(d(WeightedForm(Scalar(1)), iw.frame()).is_zero());

  ModelManifold cs = builtin("nakamura_cs");
  // Leibniz on a character: d(e^{2x}θ²) = e^{2x}(2θ¹∧θ² + dθ²)
  WeightedForm f = lit(cs, "e(2*x)*t[2]");
  CHECK(d(f, cs.frame()) == lit(cs, "(2 - lambda)*e(2*x)*t[1,2]"));
}

TEST_CASE("exterior derivative agrees with the bracket formula") {
  std::vector<std::pair<std::string, Rational>> at{{"lambda", Rational(3, 4)}, {"tau", Rational(5, 7)}};
  for (auto& name : builtin_names()) {
    ModelManifold m = builtin(name);
    auto c = oracle::bracket_table(m, at);
    for (int k = 0; k < m.dim; ++k) {
      auto src = oracle::subsets(m.dim, k), dst = oracle::subsets(m.dim, k + 1);
      Eigen::MatrixXd D = oracle::ce_matrix(c, m.dim, k);
      for (size_t col = 0; col < src.size(); ++col) {
        WeightedForm df = d(WeightedForm::mono(src[col]), m.frame());
        for (size_t row = 0; row < dst.size(); ++row) {
          double want = D(Eigen::Index(row), Eigen::Index(col));
          double got = oracle::numeric(df.coeff(dst[row]), at);
          CHECK_MESSAGE(std::abs(got - want) < 1e-12, name << " degree " << k);
        }
      }
    }
  }
}

TEST_CASE("evaluation on frame vectors") {
  CHECK(evaluate(th(1), {e(1)}) == Scalar(1));
  WeightedForm t14 = wedge(th(1), th(4));
  CHECK(evaluate(t14, {e(1), e(4)}) == Scalar(1));
  WeightedForm t126 = wedge(wedge(th(1), th(2)), th(6));
  CHECK(evaluate(t126, {e(1), e(2), e(6)}) == Scalar(1));
  CHECK(evaluate(t126, {e(2), e(1), e(6)}) == Scalar(-1));
  ModelManifold iw = builtin("iwasawa");
  Vec v1 = e(1);
  v1[1] = Scalar(1);
  CHECK(evaluate(iw.omega, {v1, e(4)}) == Scalar(1));
}

TEST_CASE("Hodge star") {
  Mask leaf = mask_of({1, 2, 3});
  CHECK(hodge_star(th(1), leaf) == wedge(th(2), th(3)));
  CHECK(hodge_star(th(2), leaf) == -wedge(th(1), th(3)));
  CHECK(hodge_star(th(3), leaf) == wedge(th(1), th(2)));
  Mask all = mask_of({1, 2, 3, 4, 5, 6});
  CHECK(hodge_star(WeightedForm(Scalar(1)), all) == WeightedForm::mono(all));
  WeightedForm t12 = wedge(th(1), th(2));
  CHECK(hodge_star(hodge_star(t12, all), all) == t12);
}

TEST_CASE("bidegrees of the structure forms") {
  for (auto& name : builtin_names()) {
    ModelManifold m = builtin(name);
    if (!m.is_complex()) continue;
    auto w = bidegree_split(m.omega, m.complex_frame());
    CHECK(w.size() == 1);
    CHECK(w.count({1, 1}) == 1);
    auto o = bidegree_split(m.Omega, m.complex_frame());
    CHECK(o.size() == 1);
    CHECK(o.count({3, 0}) == 1);
  }
}

TEST_CASE("complex basis round trip") {
  ModelManifold cs = builtin("nakamura_cs");
  WeightedForm f = lit(cs, "e(lambda*x)*t[1,2] + i*t[3,4,5] - 2*t[6]");
  CHECK(from_complex(to_complex(f, cs.complex_frame()), cs.complex_frame()) == f);
  CHECK(del(f, cs.frame(), cs.complex_frame()) + delbar(f, cs.frame(), cs.complex_frame()) == d(f, cs.frame()));
}

TEST_CASE("Lefschetz contraction") {
  ModelManifold iw = builtin("iwasawa");
  Lefschetz lf(iw.omega, 6);
  CHECK(lf.lambda(iw.omega) == WeightedForm(Scalar(3)));
  CHECK(lf.lambda(wedge(th(1), th(4))) == WeightedForm(Scalar(1)));
  CHECK(d_lambda(WeightedForm(Scalar(1)), iw.frame(), lf).is_zero());
  WeightedForm degenerate = wedge(th(1), th(4));
  CHECK_THROWS_AS(Lefschetz(degenerate, 6), DegenerateForm);
}

TEST_CASE("form literals round-trip") {
  ModelManifold cs = builtin("nakamura_cs");
  WeightedForm f = lit(cs, "(lambda/2 + i)*e(-2*lambda*x + i*lambda*y)*t[1,3,5] - 3*t[2]");
  CHECK(parse_form(form_literal(f, cs.direction_names), cs.context()) == f);
  CHECK_THROWS(parse_form("t[7]", cs.context()));
  CHECK_THROWS(parse_form("e(z)*t[1]", cs.context()));
}

TEST_CASE("wedge sign and exponential") {
  CHECK(wedge_sign(mask_of({2}), mask_of({1})) == -1);
  CHECK(wedge_sign(mask_of({1}), mask_of({1})) == 0);
  WeightedForm w = wedge(th(1), th(2)) + wedge(th(3), th(4));
  CHECK(exp_form(w) == WeightedForm(Scalar(1)) + w + wedge(wedge(th(1), th(2)), wedge(th(3), th(4))));
}
