#include "slagforge/mirror.hpp"

#include "slagforge/lattice.hpp"

#include <sstream>

namespace slagforge {

namespace {

Mask bit(int i) { return Mask(1) << i; }

WeightedForm flat_gen(int k) { return WeightedForm::mono(bit(k)); }

// coefficient of the top monomial when f is a multiple of the volume form with trivial character
std::optional<Scalar> top_constant(const WeightedForm& f, Mask top) {
  if (f.is_zero()) return Scalar(0);
  if (f.terms().size() != 1) return std::nullopt;
  auto& [k, c] = *f.terms().begin();
  if (!k.first.trivial() || k.second != top) return std::nullopt;
  return c;
}

}  // namespace

const Frame& flat_frame() {
  static const Frame fr = Frame::flat(kFlatDim, {"r0"}, {6});
  return fr;
}

WeightedForm polarization_switch(const WeightedForm& f, Mask fiber) {
  WeightedForm out;
  Scalar half_i = Scalar::i() / Scalar(2);
  for (auto& [k, c] : f.terms()) out.add(k.first, k.second, c * half_i.pow(degree(k.second & fiber)));
  return out;
}

WeightedForm fourier_mukai(const WeightedForm& f, const Scalar& fiber_volume) {
  WeightedForm kernel_exp;
  for (int i = 0; i < 3; ++i) kernel_exp += wedge(flat_gen(i), flat_gen(i + 3));
  WeightedForm integrand = wedge(polarization_switch(f), exp_form(kernel_exp));
  WeightedForm out;
  for (auto& [k, c] : integrand.terms()) {
    if ((k.second & kFlatFiber) != kFlatFiber) continue;
    Mask rest = k.second & ~kFlatFiber;
    // θ̌_{012} ∧ rest, then integrate θ̌_{012} out
    out.add(k.first, rest, c * Scalar(wedge_sign(kFlatFiber, rest)) * fiber_volume);
  }
  return out;
}

WeightedForm fourier_mukai(const WeightedForm& f, const ModelManifold& m) {
  if (!m.flat.present) throw DomainError("model " + m.name + " carries no torus-bundle data");
  return fourier_mukai(f, m.flat.fiber_volume);
}

WeightedForm mirror_omega_flat(const ModelManifold& m) {
  if (!m.flat.present) throw DomainError("model " + m.name + " carries no torus-bundle data");
  return fourier_mukai(exp_form(Scalar(2) * m.flat.omega_check), m);
}

WeightedForm canonical_symplectic() {
  WeightedForm w;
  for (int i = 0; i < 3; ++i) w += wedge(flat_gen(3 + i), flat_gen(6 + i));
  return w;
}

WeightedForm transport(const WeightedForm& flat, const ModelManifold& m, const ModelManifold& dual) {
  if (m.flat.dictionary.size() != 6) throw DomainError("model " + m.name + " declares no coordinate dictionary");
  WeightedForm out;
  for (auto& [k, c] : flat.terms()) {
    if (k.second & kFlatFiber) throw DomainError("cannot transport forms with dual fiber legs");
    WeightedForm term(c);
    for (int g : indices(k.second)) term = wedge(term, m.flat.dictionary.at(g));
    Character ch;
    for (int w = 0; w < k.first.size(); ++w) {
      if (k.first.coeff(w).is_zero()) continue;
      auto it = m.flat.direction_map.find(w);
      if (it == m.flat.direction_map.end()) throw DomainError("flat direction has no model counterpart");
      ch = ch * Character::along(it->second, k.first.coeff(w));
    }
    out += term.times(ch);
  }
  (void)dual;
  return out;
}

MirrorPair dual_model(const ModelManifold& m, const std::string& foliation_id) {
  const Foliation* fol = m.foliation(foliation_id);
  if (!fol) throw DomainError("unknown foliation " + foliation_id + " on " + m.name);
  if (!fol->section) throw DomainError("foliation " + foliation_id + " is not declared a torus fibration with section");
  if (m.flat.dual_name.empty() || m.flat.dual_via != foliation_id)
    throw DomainError("no mirror data for " + m.name + " along " + foliation_id);

  MirrorPair out;
  out.dual = builtin(m.flat.dual_name);
  if (m.lattice.present) {
    out.dual.lattice.tau = m.lattice.tau;
    out.dual.lattice.tau.inverted = !m.lattice.tau.inverted;
    QuadMat2 P = eigen_data(m.lattice.M).P;
    out.fiber_lattice = m.lattice.tau.inverted ? transpose(inverse(P)) : P;
    out.dual_lattice = transpose(inverse(out.fiber_lattice));
  }
  out.dictionary = m.flat.dictionary;
  if (m.flat.present && m.flat.dictionary.size() == 6) {
    out.omega_transported = transport(canonical_symplectic(), m, out.dual) == out.dual.omega;
    out.Omega_transported = transport(mirror_omega_flat(m), m, out.dual) == out.dual.Omega;
  } else {
    // the reverse direction inherits the identification from the forward dictionary
    const ModelManifold& fwd = out.dual;
    out.omega_transported = fwd.flat.present && fwd.flat.dual_name == m.name &&
                            transport(canonical_symplectic(), fwd, m) == m.omega;
  }
  return out;
}

SusyType parse_susy_type(const std::string& s) {
  if (s == "IIA" || s == "iia") return SusyType::IIA;
  if (s == "IIB" || s == "iib") return SusyType::IIB;
  throw ParseError("susy type must be IIA or IIB, got \"" + s + "\"");
}

std::string susy_name(SusyType t) { return t == SusyType::IIA ? "IIA" : "IIB"; }

bool SusyReport::pass() const { return dOmega.is_zero() && domega.is_zero() && conformal.is_zero() && F.has_value(); }

std::string SusyReport::str(const ModelManifold& m) const {
  std::ostringstream os;
  const auto& dn = m.direction_names;
  os << "Type " << susy_name(type) << " check on " << m.name << ": " << (pass() ? "pass" : "fail") << "\n";
  os << (type == SusyType::IIB ? "  dΩ = " : "  d(Re Ω) = ") << (dOmega.is_zero() ? "0" : dOmega.str(dn)) << "\n";
  os << (type == SusyType::IIB ? "  d(ω²) = " : "  dω = ") << (domega.is_zero() ? "0" : domega.str(dn)) << "\n";
  os << "  d(|Ω| ω²) = " << (conformal.is_zero() ? "0" : conformal.str(dn)) << "\n";
  os << "  F = " << (F ? F->str() : "not constant") << "\n";
  os << "  |Ω|² = " << (norm_sq ? norm_sq->str() : "not constant") << "\n";
  os << (type == SusyType::IIB ? "  ρ_B = " : "  ρ_A = ") << (rho.is_zero() ? "0" : rho.str(dn)) << "\n";
  for (auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

SusyReport susy_check(const ModelManifold& m, SusyType type) {
  if (m.omega.is_zero() || m.Omega.is_zero()) throw DomainError("model " + m.name + " lacks ω or Ω");
  const Frame& fr = m.frame();
  SusyReport r;
  r.type = type;
  Mask top = m.full();
  WeightedForm w2 = wedge(m.omega, m.omega);
  WeightedForm w3 = wedge(w2, m.omega);
  auto vol = top_constant(w3, top);
  if (!vol || vol->is_zero()) throw DegenerateForm("ω is degenerate on " + m.name);
  auto oo = top_constant(wedge(m.Omega, m.Omega.conj()), top);
  if (oo) {
    // Ω∧Ω̄ = -iF ω³/6
    r.F = *oo / (-Scalar::i() * *vol / Scalar(6));
    // |Ω|² ω³/3! = (i^9/2^3) Ω∧Ω̄
    r.norm_sq = Scalar::i() / Scalar(8) * *oo / (*vol / Scalar(6));
  } else {
    r.notes.push_back("Ω∧Ω̄ is not a constant multiple of the volume form");
  }
  // |Ω| constant: d(|Ω| ω²) vanishes with d(ω²)
  r.conformal = r.norm_sq ? d(w2, fr) : WeightedForm(Scalar(1));

  if (type == SusyType::IIB) {
    if (!m.is_complex()) throw DomainError("Type IIB check needs a complex structure");
    r.dOmega = d(m.Omega, fr);
    r.domega = d(w2, fr);
    if (r.F && !r.F->is_zero()) {
      const ComplexFrame& cf = m.complex_frame();
      r.rho = Scalar(2) * Scalar::i() * del(delbar(r.F->inverse() * m.omega, fr, cf), fr, cf);
    }
  } else {
    r.dOmega = d(m.Omega.re(), fr);
    r.domega = d(m.omega, fr);
    if (r.F) {
      Lefschetz lf(m.omega, m.dim);
      r.rho = d(d_lambda(*r.F * m.Omega.im(), fr, lf), fr);
    }
  }
  return r;
}

}  // namespace slagforge
