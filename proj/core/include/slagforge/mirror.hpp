#pragma once

#include "slagforge/model.hpp"
#include "slagforge/quadint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slagforge {

// flat frame of the torus bundle: dθ̌_0..2 = 0..2, dθ_0..2 = 3..5, dr_0..2 = 6..8, direction r0 along dr_0
constexpr int kFlatDim = 9;
constexpr Mask kFlatFiber = 0b000000111;
const Frame& flat_frame();

// monomials with p fiber legs scale by (i/2)^p
WeightedForm polarization_switch(const WeightedForm& f, Mask fiber = kFlatFiber);

// ∫_fiber P(f) ∧ exp(Σ dθ̌_i ∧ dθ_i), fiber oriented by dθ̌_0 ∧ dθ̌_1 ∧ dθ̌_2
WeightedForm fourier_mukai(const WeightedForm& f, const Scalar& fiber_volume);
WeightedForm fourier_mukai(const WeightedForm& f, const ModelManifold& m);

// the FT image of e^{2ω̌} for the model's flat data
WeightedForm mirror_omega_flat(const ModelManifold& m);
// canonical Σ dθ_i ∧ dr_i
WeightedForm canonical_symplectic();

// rewrite a form on generators 3..8 in the dual coframe via the declared dictionary
WeightedForm transport(const WeightedForm& flat, const ModelManifold& m, const ModelManifold& dual);

struct MirrorPair {
  ModelManifold dual;
  QuadMat2 fiber_lattice, dual_lattice;  // rows generate the fiber lattices; dual = (P⁻¹)ᵀ
  std::map<int, WeightedForm> dictionary;
  bool omega_transported = false;  // canonical ω maps to the dual's ω
  std::optional<bool> Omega_transported;  // FT output maps to the dual's Ω (when flat data exist)
};

MirrorPair dual_model(const ModelManifold& m, const std::string& foliation_id);

enum class SusyType { IIA, IIB };
SusyType parse_susy_type(const std::string& s);
std::string susy_name(SusyType t);

struct SusyReport {
  SusyType type = SusyType::IIB;
  WeightedForm dOmega;     // IIB: dΩ, IIA: d Re Ω
  WeightedForm domega;     // IIB: d(ω²), IIA: dω
  WeightedForm conformal;  // d(|Ω| ω²)
  std::optional<Scalar> F;  // Ω∧Ω̄ = -iFω³/6, empty when not constant
  std::optional<Scalar> norm_sq;  // |Ω|²
  WeightedForm rho;        // ρ_B = 2i∂∂̄(F⁻¹ω) or ρ_A = dd^Λ(F Im Ω)
  std::vector<std::string> notes;

  bool pass() const;
  std::string str(const ModelManifold& m) const;
};

SusyReport susy_check(const ModelManifold& m, SusyType type);

}  // namespace slagforge
