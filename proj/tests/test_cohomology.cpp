#include "oracle.hpp"

#include "slagforge/cohomology.hpp"
#include "slagforge/mirror.hpp"
#include "slagforge/parse.hpp"

#include <doctest.h>

using namespace slagforge;

namespace {

using Sizes = std::vector<size_t>;

bool has_rep(const CohomologyTable& t, std::pair<int, int> key, const WeightedForm& f) {
  auto it = t.groups.find(key);
  if (it == t.groups.end()) return false;
  const auto& r = it->second.representatives;
  return std::find(r.begin(), r.end(), f) != r.end();
}

Sizes trimmed_row(const CohomologyTable& t, int k) {
  Sizes out, r = t.row(k);
  for (int p = k; p >= 0; --p)
    if (p <= 3 && k - p <= 3) out.push_back(r[size_t(k - p)]);
  return out;
}

}  // namespace

TEST_CASE("de Rham cohomology of CS Nakamura") {
  ModelManifold cs = builtin("nakamura_cs");
  CohomologyTable t = de_rham(cs);
  CHECK(t.betti() == Sizes{1, 2, 5, 8, 5, 2, 1});
  for (auto mono : {"t[1,4]", "t[3,5]", "t[2,6]", "t[2,3]", "t[5,6]"})
    CHECK(has_rep(t, {2, 0}, parse_form(mono, cs.context())));
  for (auto mono : {"t[1]", "t[4]"}) CHECK(has_rep(t, {1, 0}, parse_form(mono, cs.context())));
}

TEST_CASE("de Rham cohomology matches invariant forms for completely solvable frames") {
  std::vector<std::pair<std::string, Rational>> at{{"lambda", Rational(3, 4)}};
  for (auto name : {"iwasawa", "nakamura_cs"}) {
    ModelManifold m = builtin(name);
    Sizes want = oracle::invariant_betti(oracle::bracket_table(m, at), m.dim);
    CHECK_MESSAGE(de_rham(m).betti() == want, name);
  }
  CHECK(de_rham(builtin("iwasawa")).betti() == Sizes{1, 4, 8, 10, 8, 4, 1});
}

TEST_CASE("de Rham cohomology of the CP pair") {
  CHECK(de_rham(builtin("nakamura_cp")).betti() == Sizes{1, 2, 5, 8, 5, 2, 1});
  CHECK(de_rham(builtin("nakamura_cp_mirror")).betti() == Sizes{1, 2, 3, 4, 3, 2, 1});
}

TEST_CASE("Poincare duality and rank-nullity") {
  for (auto& name : builtin_names()) {
    ModelManifold m = builtin(name);
    auto b = de_rham(m).betti();
    for (int k = 0; k <= 6; ++k) CHECK_MESSAGE(b[size_t(k)] == b[size_t(6 - k)], name);
    CHECK_MESSAGE(rank_nullity_holds(m), name);
  }
}

TEST_CASE("h^{1,0} case split") {
  ModelManifold cs = builtin("nakamura_cs");
  CHECK(dolbeault_h10(cs) == 3);
  CHECK(dolbeault_h10(with_tau_mode(cs, std::nullopt)) == 1);
  CHECK(dolbeault_h10(with_tau_mode(cs, Rational(2))) == 3);
  CHECK(dolbeault_h10(with_tau_mode(cs, Rational(1, 2))) == 1);
  CHECK(dolbeault_h10(builtin("nakamura_cs_mirror")) == 1);
  CHECK(dolbeault_h10(builtin("iwasawa")) == 2);
}

TEST_CASE("Tseng-Yau diamond of the CS mirror") {
  ModelManifold x = builtin("nakamura_cs_mirror");
  CohomologyTable t = refined_tseng_yau(x);
  std::vector<Sizes> table{{1}, {1, 1}, {1, 3, 1}, {1, 3, 3, 1}, {1, 3, 1}, {1, 1}, {1}};
  for (int k = 0; k <= 6; ++k) CHECK(trimmed_row(t, k) == table[size_t(k)]);
  CHECK(has_rep(t, {1, 1}, parse_form("t[1,4]", x.context())));
  CHECK(has_rep(t, {2, 2}, parse_form("t[2,3,5,6]", x.context())));
}

TEST_CASE("Bott-Chern diamond of CS Nakamura mirrors Tseng-Yau") {
  ModelManifold n = builtin("nakamura_cs");
  CohomologyTable bc = refined_bott_chern(n);
  CHECK(bc.dim(0, 0) == 1);
  CHECK(bc.dim(3, 3) == 1);
  DiamondCheck dc = mirror_diamond_check(builtin("nakamura_cs_mirror"), n);
  CHECK(dc.pass);
  CHECK(dc.mismatches.empty());
}

TEST_CASE("constants and top degree") {
  for (auto& name : builtin_names()) {
    ModelManifold m = builtin(name);
    if (m.is_complex()) {
      CohomologyTable bc = refined_bott_chern(m);
      CHECK_MESSAGE(bc.dim(0, 0) == 1, name);
    }
    if (m.is_symplectic()) {
      CohomologyTable ty = refined_tseng_yau(m);
      CHECK_MESSAGE(ty.dim(0, 0) == 1, name);
      CHECK_MESSAGE(ty.dim(3, 3) == 1, name);
    }
  }
}

// printed CP mirror tables; the computation disagrees, see the acceptance report
TEST_CASE("Tseng-Yau of the CP mirror, τ⁻¹ ∈ πZ" * doctest::may_fail()) {
  CohomologyTable t = refined_tseng_yau(with_tau_mode(builtin("nakamura_cp_mirror"), Rational(1)));
  std::vector<Sizes> table{{1}, {1, 1}, {0, 3, 0}, {0, 0, 0, 0}, {0, 3, 0}, {1, 1}, {1}};
  for (int k = 0; k <= 6; ++k) CHECK(trimmed_row(t, k) == table[size_t(k)]);
}

TEST_CASE("Tseng-Yau of the CP mirror, τ⁻¹ ∉ πZ" * doctest::may_fail()) {
  CohomologyTable t = refined_tseng_yau(with_tau_mode(builtin("nakamura_cp_mirror"), std::nullopt));
  std::vector<Sizes> table{{1}, {1, 1}, {0, 2, 0}, {0, 0, 0, 0}, {0, 2, 0}, {1, 1}, {1}};
  for (int k = 0; k <= 6; ++k) CHECK(trimmed_row(t, k) == table[size_t(k)]);
}

TEST_CASE("CP pair diamond check" * doctest::may_fail()) {
  CHECK(mirror_diamond_check(builtin("nakamura_cp_mirror"), builtin("nakamura_cp")).pass);
}

TEST_CASE("computed CP mirror Tseng-Yau is independent of the τ-mode") {
  ModelManifold m = builtin("nakamura_cp_mirror");
  CohomologyTable a = refined_tseng_yau(with_tau_mode(m, Rational(1)));
  CohomologyTable b = refined_tseng_yau(with_tau_mode(m, std::nullopt));
  for (int k = 0; k <= 6; ++k) CHECK(a.row(k) == b.row(k));
  CHECK(a.dim(1, 1) == 2);
}

TEST_CASE("weight candidates are closed under the declared range") {
  ModelManifold cs = builtin("nakamura_cs");
  auto c = weight_candidates(cs), adm = admissible_characters(cs);
  CHECK(!c.empty());
  CHECK(adm.size() <= c.size());
  CHECK(std::find(adm.begin(), adm.end(), Character()) != adm.end());
}
