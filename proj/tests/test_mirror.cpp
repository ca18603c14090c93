#include "slagforge/cohomology.hpp"
#include "slagforge/mirror.hpp"
#include "slagforge/parse.hpp"

#include <doctest.h>

#include <random>

using namespace slagforge;

namespace {

Scalar lam() { return Scalar::param("lambda"); }

FormContext flat_ctx() {
  FormContext c;
  c.dim = kFlatDim;
  c.directions = {"r0"};
  return c;
}

WeightedForm flat(const std::string& s) { return parse_form(s, flat_ctx()); }

// pullback by J: θ^a ∘ J = -θ^b, θ^b ∘ J = θ^a for J E_a = E_b
WeightedForm pull_j(const WeightedForm& f, const ModelManifold& m) {
  std::vector<WeightedForm> img(size_t(m.dim));
  for (auto [a, b] : m.jpairs) {
    img[size_t(a)] = -WeightedForm::theta(b + 1);
    img[size_t(b)] = WeightedForm::theta(a + 1);
  }
  WeightedForm out;
  for (auto& [k, c] : f.terms()) {
    WeightedForm t = WeightedForm::mono(0, c, k.first);
    for (int g : indices(k.second)) t = wedge(t, img[size_t(g)]);
    out += t;
  }
  return out;
}

// 2i∂∂̄ = d d^c with d^c = J⁻¹ d J
WeightedForm ddc(const WeightedForm& f, const ModelManifold& m) {
  WeightedForm dj = d(pull_j(f, m), m.frame());
  WeightedForm jinv;
  for (int k = 0; k <= m.dim; ++k) {
    WeightedForm part = dj.part(k);
    jinv += Scalar(k % 2 ? -1 : 1) * pull_j(part, m);  // J⁻¹ = (-1)^k J on k-forms
  }
  return d(jinv, m.frame());
}

}  // namespace

TEST_CASE("polarization switch") {
  WeightedForm w = flat("t[1,7] + e(-2*lambda*r0)*t[2,8] + e(2*lambda*r0)*t[3,9]");
  CHECK(polarization_switch(exp_form(Scalar(2) * w)) == exp_form(Scalar::i() * w));
  CHECK(polarization_switch(WeightedForm(Scalar(1))) == WeightedForm(Scalar(1)));
  CHECK(polarization_switch(flat("2*t[1,7]")) == flat("i*t[1,7]"));
}

TEST_CASE("Fourier-Mukai transform of the CS balanced metric") {
  ModelManifold n = builtin("nakamura_cs");
  WeightedForm ft = mirror_omega_flat(n);
  CHECK(ft == flat("-(t[4] + i*t[7]) * (e(lambda*r0)*t[5] + i*e(-lambda*r0)*t[8]) *"
                   " (e(-lambda*r0)*t[6] + i*e(lambda*r0)*t[9])"));
  CHECK(fourier_mukai(WeightedForm(), n).is_zero());
  ModelManifold x = builtin("nakamura_cs_mirror");
  CHECK(transport(ft, n, x) == parse_form("i*(t[1]+i*t[4])*(t[3]+i*t[5])*(t[2]+i*t[6])", x.context()));
}

TEST_CASE("dual models") {
  ModelManifold n = builtin("nakamura_cs");
  MirrorPair p = dual_model(n, "L234");
  CHECK(p.dual.name == "nakamura_cs_mirror");
  CHECK(p.omega_transported);
  REQUIRE(p.Omega_transported);
  CHECK(*p.Omega_transported);
  CHECK(p.dual.lattice.tau.inverted);
  CHECK(p.dual_lattice == transpose(inverse(p.fiber_lattice)));

  MirrorPair back = dual_model(p.dual, "L234");
  CHECK(back.dual.name == "nakamura_cs");
  CHECK_FALSE(back.dual.lattice.tau.inverted);
  CHECK(back.dual.lattice.tau.active_q() == n.lattice.tau.active_q());
  CHECK(back.dual_lattice == p.fiber_lattice);

  MirrorPair cp = dual_model(builtin("nakamura_cp"), "L123");
  CHECK(cp.dual.name == "nakamura_cp_mirror");
  CHECK(cp.omega_transported);

  CHECK_THROWS_AS(dual_model(n, "L123"), DomainError);
  CHECK_THROWS_AS(dual_model(n, "L999"), DomainError);
}

TEST_CASE("Type IIB on the complex builtins") {
  for (auto name : {"iwasawa", "nakamura_cs", "nakamura_cp"}) {
    ModelManifold m = builtin(name);
    SusyReport r = susy_check(m, SusyType::IIB);
    CHECK_MESSAGE(r.pass(), name);
    REQUIRE(r.F);
    CHECK(*r.F == Scalar(8));
    REQUIRE(r.norm_sq);
    CHECK(*r.norm_sq == Scalar(1));
    // ρ_B against dd^c computed without the ∂/∂̄ split
    CHECK_MESSAGE(r.rho == ddc(r.F->inverse() * m.omega, m), name);
  }
}

TEST_CASE("ρ_B values") {
  ModelManifold cs = builtin("nakamura_cs");
  SusyReport r = susy_check(cs, SusyType::IIB);
  CHECK(r.rho == parse_form("-1/2*lambda^2*(t[1,2,4,5] + t[1,3,4,6])", cs.context()));
  ModelManifold cp = builtin("nakamura_cp");
  CHECK(susy_check(cp, SusyType::IIB).rho ==
        parse_form("-1/8*(p[1]*pb[1]*p[2]*pb[2] + p[1]*pb[1]*p[3]*pb[3])", cp.context()));
}

// printed CS values; the expansion gives the opposite sign on θ^{1245}
TEST_CASE("printed CS ρ_B" * doctest::may_fail()) {
  ModelManifold cs = builtin("nakamura_cs");
  CHECK(susy_check(cs, SusyType::IIB).rho == parse_form("1/2*lambda^2*(t[1,2,4,5] - t[1,3,4,6])", cs.context()));
  WeightedForm w = Scalar(2) * Scalar::i() * del(delbar(cs.omega, cs.frame(), cs.complex_frame()), cs.frame(), cs.complex_frame());
  CHECK(w == parse_form("4*lambda^2*(t[1,2,4,5] - t[1,3,4,6])", cs.context()));
}

TEST_CASE("Type IIA on the symplectic mirrors") {
  for (auto name : {"nakamura_cs_mirror", "nakamura_cp_mirror"}) {
    ModelManifold m = builtin(name);
    SusyReport r = susy_check(m, SusyType::IIA);
    CHECK_MESSAGE(r.pass(), name);
    REQUIRE(r.F);
    CHECK(*r.F * Scalar(8) == Scalar(64));
    CHECK(d(m.omega, m.frame()).is_zero());
    CHECK(d(m.Omega.re(), m.frame()).is_zero());
  }
  CHECK_THROWS_AS(susy_check(builtin("nakamura_cs_mirror"), SusyType::IIB), DomainError);
}

TEST_CASE("2i∂∂̄ agrees with dd^c on random forms") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3), pick(0, 63);
  for (auto name : {"iwasawa", "nakamura_cs", "nakamura_cp"}) {
    ModelManifold m = builtin(name);
    auto chars = weight_candidates(m);
    std::uniform_int_distribution<size_t> ch(0, chars.size() - 1);
    for (int n = 0; n < 100; ++n) {
      WeightedForm f;
      for (int t = 0; t < 3; ++t) f.add(chars[ch(rng)], Mask(pick(rng)), Scalar(coef(rng)) + Scalar(coef(rng)) * lam());
      WeightedForm lhs = Scalar(2) * Scalar::i() * del(delbar(f, m.frame(), m.complex_frame()), m.frame(), m.complex_frame());
      CHECK(lhs == ddc(f, m));
    }
  }
}

TEST_CASE("susy type parsing") {
  CHECK(parse_susy_type("IIA") == SusyType::IIA);
  CHECK(parse_susy_type("iib") == SusyType::IIB);
  CHECK_THROWS_AS(parse_susy_type("IIC"), ParseError);
}
