#include "slagforge/deform.hpp"

#include "slagforge/slag.hpp"

#include <algorithm>

namespace slagforge {

namespace {

Mask bit(int i) { return Mask(1) << i; }

std::string coef_prefix(const Scalar& c, bool first) {
  std::string s = c.str();
  s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
  bool neg = !s.empty() && s[0] == '-';
  std::string body = neg ? s.substr(1) : s;
  bool compound = body.find_first_of("+-") != std::string::npos;
  if (compound) {
    body = "(" + s + ")";
    neg = false;
  }
  if (body == "1") body.clear();
  std::string sign = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
  return sign + body;
}

std::string idx(int i) { return std::to_string(i + 1); }

void check_preconditions(const ModelManifold& m, const std::array<int, 3>& t) {
  if (m.jmap.empty()) throw DomainError("deformation system needs an almost complex structure");
  auto inv = involutive(m, t);
  if (!inv.involutive) throw DomainError("triple " + triple_name(t) + " is not involutive: " + inv.witness_text);
  auto axis = DistributionMatrix::axis(t);
  if (!eval_direct(m, Phase::Zero, axis).zero() && !eval_direct(m, Phase::MinusHalfPi, axis).zero())
    throw DomainError("triple " + triple_name(t) + " is not special Lagrangian");
}

std::array<int, 3> zero_based(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  for (auto& v : t) --v;
  return t;
}

}  // namespace

Scalar DeformEquation::zero_coeff(int r) const {
  auto it = zero.find(r);
  return it == zero.end() ? Scalar(0) : it->second;
}

std::string DeformEquation::str() const {
  std::string s;
  for (auto& [mr, c] : jets) {
    s += coef_prefix(c, s.empty()) + "E_" + idx(mr.first) + "(α_" + idx(mr.second) + ")";
  }
  for (auto& [r, c] : zero) s += coef_prefix(c, s.empty()) + "α_" + idx(r);
  if (s.empty()) s = "0";
  return s + " = 0";
}

std::string DeformSystem::str() const {
  std::string s;
  for (auto& e : equations) s += e.str() + "\n";
  return s;
}

DeformSystem generate(const ModelManifold& m, const std::array<int, 3>& triple, bool signed_j) {
  check_preconditions(m, triple);
  auto [i, j, k] = zero_based(triple);
  const Frame& fr = m.frame();
  Mask leaf = bit(i) | bit(j) | bit(k);
  std::array<int, 3> legs{i, j, k};
  DeformSystem sys;
  sys.triple = {i + 1, j + 1, k + 1};
  sys.signed_j = signed_j;

  auto put = [](std::map<int, Scalar>& z, int r, const Scalar& c) {
    if (c.is_zero()) return;
    Scalar& slot = z[r];
    slot += c;
    if (slot.is_zero()) z.erase(r);
  };

  // d(⋆α) = Σ_r [Σ_m E_m(α_r) θ^m ∧ ⋆θ^r + α_r d⋆θ^r]
  DeformEquation div;
  div.label = "d*alpha";
  for (int r : legs) {
    WeightedForm star = hodge_star(WeightedForm::theta(r + 1), leaf);
    for (int m_ : legs) {
      Scalar c = wedge(WeightedForm::theta(m_ + 1), star).coeff(leaf);
      if (!c.is_zero()) div.jets[{m_, r}] = c;
    }
    put(div.zero, r, d(star, fr).restrict_to(leaf).coeff(leaf));
  }
  sys.equations.push_back(div);

  WeightedForm dw = d(m.omega, fr);
  std::array<std::pair<int, int>, 3> slots{{{i, j}, {i, k}, {j, k}}};
  for (auto [a, b] : slots) {
    Mask slot = bit(a) | bit(b);
    DeformEquation eq;
    eq.label = "θ^{" + idx(a) + idx(b) + "}";
    for (int r : legs) {
      for (int m_ : legs) {
        Scalar c = wedge(WeightedForm::theta(m_ + 1), WeightedForm::theta(r + 1)).coeff(slot);
        if (!c.is_zero()) eq.jets[{m_, r}] = c;
      }
      put(eq.zero, r, d(WeightedForm::theta(r + 1), fr).restrict_to(leaf).coeff(slot));
      // Tα = -dω(Jα*, ·, ·)
      int rt = m.jmap[r];
      Scalar s = signed_j ? Scalar(m.jsign[r]) : Scalar(1);
      put(eq.zero, r, -s * interior(rt, dw).restrict_to(leaf).coeff(slot));
    }
    sys.equations.push_back(eq);
  }

  DeformSystem stmt = closed_form(m, triple, false), proof = closed_form(m, triple, true);
  auto& cf = sys.closed_form;
  cf.statement_variant = cf.proof_variant = true;
  for (size_t e = 0; e < 4; ++e) {
    if (!(sys.equations[e] == stmt.equations[e])) cf.statement_variant = false;
    if (!(sys.equations[e] == proof.equations[e])) cf.proof_variant = false;
  }
  cf.matches = cf.statement_variant || cf.proof_variant;
  const DeformSystem& ref = cf.proof_variant && !cf.statement_variant ? proof : stmt;
  for (size_t e = 0; e < 4; ++e) {
    const auto& got = sys.equations[e];
    const auto& want = ref.equations[e];
    if (got.jets != want.jets) cf.discrepancies.push_back("equation " + std::to_string(e + 1) + ": jet part differs");
    for (int r : legs)
      if (got.zero_coeff(r) != want.zero_coeff(r))
        cf.discrepancies.push_back("equation " + std::to_string(e + 1) + ", α_" + idx(r) + ": expansion " +
                                   got.zero_coeff(r).str() + ", closed form " + want.zero_coeff(r).str());
  }
  return sys;
}

DeformSystem closed_form(const ModelManifold& m, const std::array<int, 3>& triple, bool proof_variant) {
  if (m.jmap.empty()) throw DomainError("deformation system needs an almost complex structure");
  auto [i, j, k] = zero_based(triple);
  const Frame& fr = m.frame();
  Mask leaf = bit(i) | bit(j) | bit(k);
  auto f = [&](int t, int r, int s) { return m.f(t, r, s); };
  auto tl = [&](int h) { return m.jmap[h]; };
  // (-1)^{F(h, h̃)}
  auto sg = [&](int h) { return Scalar(h > m.jmap[h] ? -1 : 1); };
  auto one_minus = [&](int h) { return Scalar(1) - sg(h); };
  auto fl = [&](int r, int s) {
    WeightedForm two = wedge(WeightedForm::theta(r + 1), WeightedForm::theta(s + 1));
    return d(two, fr).restrict_to(leaf).coeff(leaf);
  };
  int it = tl(i), jt = tl(j), kt = tl(k);

  DeformSystem sys;
  sys.triple = {i + 1, j + 1, k + 1};
  auto clean = [](DeformEquation& e) {
    for (auto p = e.zero.begin(); p != e.zero.end();) p = p->second.is_zero() ? e.zero.erase(p) : std::next(p);
  };

  DeformEquation e1;
  e1.label = "d*alpha";
  e1.jets = {{{i, i}, Scalar(1)}, {{j, j}, Scalar(1)}, {{k, k}, Scalar(1)}};
  e1.zero = {{i, fl(j, k)}, {j, -fl(i, k)}, {k, fl(i, j)}};
  clean(e1);

  DeformEquation e2;
  e2.label = "θ^{" + idx(i) + idx(j) + "}";
  e2.jets = {{{i, j}, Scalar(1)}, {{j, i}, Scalar(-1)}};
  e2.zero = {{i, one_minus(i) * f(i, i, j) + sg(i) * f(it, j, it) - sg(j) * f(jt, i, it)},
             {j, one_minus(j) * f(j, i, j) - sg(j) * f(jt, i, jt) + sg(i) * f(it, j, jt)},
             {k, one_minus(k) * f(k, i, j) + sg(i) * f(it, j, kt) - sg(j) * f(jt, i, kt)}};
  clean(e2);

  DeformEquation e3;
  e3.label = "θ^{" + idx(i) + idx(k) + "}";
  e3.jets = {{{i, k}, Scalar(1)}, {{k, i}, Scalar(-1)}};
  e3.zero = {{i, one_minus(i) * f(i, i, k) + sg(i) * f(it, k, it) - sg(k) * f(kt, i, it)},
             {j, one_minus(j) * f(j, i, k) - sg(k) * f(kt, i, jt) + sg(i) * f(it, k, jt)},
             {k, one_minus(k) * f(k, i, k) + sg(i) * f(it, k, kt) - sg(k) * f(kt, i, kt)}};
  clean(e3);

  DeformEquation e4;
  e4.label = "θ^{" + idx(j) + idx(k) + "}";
  e4.jets = {{{j, k}, Scalar(1)}, {{k, j}, Scalar(-1)}};
  int last = proof_variant ? i : j;
  e4.zero = {{i, one_minus(i) * f(i, j, k) + sg(j) * f(jt, k, it) - sg(k) * f(kt, j, it)},
             {j, one_minus(j) * f(j, j, k) + sg(j) * f(jt, k, jt) - sg(k) * f(kt, j, jt)},
             {k, one_minus(k) * f(k, j, k) + sg(j) * f(jt, k, kt) - sg(k) * f(kt, last, kt)}};
  clean(e4);

  sys.equations = {e1, e2, e3, e4};
  return sys;
}

InvariantSolutions invariant_solution_dim(const DeformSystem& s) {
  std::array<int, 3> legs{s.triple[0] - 1, s.triple[1] - 1, s.triple[2] - 1};
  Mat a;
  for (auto& e : s.equations) {
    Vec row(3);
    for (int c = 0; c < 3; ++c) row[c] = e.zero_coeff(legs[c]);
    a.push_back(row);
  }
  InvariantSolutions out;
  out.basis = nullspace(a);
  out.dim = out.basis.size();
  return out;
}

int leaf_betti1(const ModelManifold& m, const std::array<int, 3>& triple) {
  auto t = zero_based(triple);
  Mask leaf = bit(t[0]) | bit(t[1]) | bit(t[2]);
  const Frame& fr = m.frame();
  for (int u = 0; u < m.dim; ++u) {
    if (leaf & bit(u)) continue;
    if (!d(WeightedForm::theta(u + 1), fr).restrict_to(leaf).is_zero())
      throw DomainError("triple " + triple_name(triple) + " does not span a subalgebra");
  }
  std::array<Mask, 3> two{bit(t[0]) | bit(t[1]), bit(t[0]) | bit(t[2]), bit(t[1]) | bit(t[2])};
  Mat dmat(3, Vec(3));
  for (int c = 0; c < 3; ++c) {
    WeightedForm dt = d(WeightedForm::theta(t[c] + 1), fr).restrict_to(leaf);
    for (int r = 0; r < 3; ++r) dmat[r][c] = dt.coeff(two[r]);
  }
  return 3 - int(rank(dmat));
}

}  // namespace slagforge
