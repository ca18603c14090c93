#include "slagforge/deform.hpp"
#include "slagforge/slag.hpp"

#include <doctest.h>

using namespace slagforge;

namespace {

Scalar lam() { return Scalar::param("lambda"); }

}  // namespace

TEST_CASE("Iwasawa {1,2,3} system") {
  DeformSystem s = generate(builtin("iwasawa"), {1, 2, 3});
  REQUIRE(s.equations.size() == 4);
  CHECK(s.equations[0].str() == "E_1(α_1) + E_2(α_2) + E_3(α_3) = 0");
  CHECK(s.equations[1].str() == "E_1(α_2) - E_2(α_1) = 0");
  CHECK(s.equations[2].str() == "E_1(α_3) - E_3(α_1) + α_2 = 0");
  CHECK(s.equations[3].str() == "E_2(α_3) - E_3(α_2) - α_1 = 0");
  auto sol = invariant_solution_dim(s);
  CHECK(sol.dim == 1);
  REQUIRE(sol.basis.size() == 1);
  CHECK(sol.basis[0][0].is_zero());
  CHECK(sol.basis[0][1].is_zero());
}

TEST_CASE("CS Nakamura systems") {
  ModelManifold cs = builtin("nakamura_cs");
  DeformSystem a = generate(cs, {1, 2, 3});
  CHECK(a.equations[1].zero_coeff(1) == lam());
  CHECK(a.equations[2].zero_coeff(2) == -lam());
  CHECK(invariant_solution_dim(a).dim == 1);

  DeformSystem b = generate(cs, {1, 5, 6});
  CHECK(b.equations[1].zero_coeff(4) == Scalar(-3) * lam());
  CHECK(b.equations[2].zero_coeff(5) == Scalar(3) * lam());
  CHECK(invariant_solution_dim(b).dim == 1);

  // abelian leaf: no zero-order terms at all
  DeformSystem c = generate(cs, {2, 3, 4});
  for (auto& e : c.equations) CHECK(e.zero.empty());
  CHECK(invariant_solution_dim(c).dim == 3);
}

TEST_CASE("closed form agrees on the phase-0 triples") {
  for (auto& name : builtin_names()) {
    ModelManifold m = builtin(name);
    for (auto& h : scan_axis(m, Phase::Zero)) {
      if (!h.involutivity.involutive) continue;
      DeformSystem s = generate(m, h.triple);
      CHECK_MESSAGE(s.closed_form.statement_variant, name << " " << triple_name(h.triple));
    }
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(generate(builtin("nakamura_cp"), {2, 4, 6}), DomainError);
  CHECK_THROWS_AS(generate(builtin("iwasawa"), {1, 2, 4}), DomainError);
}

TEST_CASE("first Betti numbers of the leaves") {
  ModelManifold cs = builtin("nakamura_cs");
  for (auto t : {std::array<int, 3>{1, 2, 3}, {1, 5, 6}, {1, 3, 5}, {1, 2, 6}}) CHECK(leaf_betti1(cs, t) == 1);
  for (auto t : {std::array<int, 3>{2, 4, 6}, {3, 4, 5}, {2, 3, 4}, {4, 5, 6}}) CHECK(leaf_betti1(cs, t) == 3);
  for (auto t : {std::array<int, 3>{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}})
    CHECK(leaf_betti1(builtin("iwasawa"), t) == 2);
  CHECK_THROWS_AS(leaf_betti1(builtin("iwasawa"), {1, 2, 4}), DomainError);
}
