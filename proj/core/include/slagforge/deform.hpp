#pragma once

#include "slagforge/model.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace slagforge {

// Σ c_{m,r} E_m(α_r) + Σ c_r α_r = 0, frame indices 0-based
struct DeformEquation {
  std::string label;                             // "d*alpha" or the 2-form slot "θ^{ij}"
  std::map<std::pair<int, int>, Scalar> jets;    // (m, r) -> coefficient of E_m(α_r)
  std::map<int, Scalar> zero;                    // r -> coefficient of α_r

  Scalar zero_coeff(int r) const;
  std::string str() const;
  friend bool operator==(const DeformEquation& a, const DeformEquation& b) {
    return a.jets == b.jets && a.zero == b.zero;
  }
};

struct ClosedFormCheck {
  bool matches = false;           // every coefficient agrees for at least one printed variant
  bool statement_variant = false;  // θ^{jk}/α_k slot uses f^{k̃}_{jk̃}
  bool proof_variant = false;      // θ^{jk}/α_k slot uses f^{k̃}_{ik̃}
  std::vector<std::string> discrepancies;
};

struct DeformSystem {
  std::array<int, 3> triple{};  // 1-based ascending
  bool signed_j = false;        // Jα* taken with the signs of J
  std::vector<DeformEquation> equations;  // d*α, then θ^{ij}, θ^{ik}, θ^{jk} of dα + Tα
  ClosedFormCheck closed_form;

  std::string str() const;
};

// direct expansion of d(⋆α) and dα + Tα restricted to the leaf
DeformSystem generate(const ModelManifold& m, const std::array<int, 3>& triple, bool signed_j = false);

// the printed closed-form coefficients, with either reading of the θ^{jk}/α_k slot
DeformSystem closed_form(const ModelManifold& m, const std::array<int, 3>& triple, bool proof_variant);

struct InvariantSolutions {
  size_t dim = 0;
  std::vector<Vec> basis;  // coefficients of (α_i, α_j, α_k)
};

InvariantSolutions invariant_solution_dim(const DeformSystem& s);

int leaf_betti1(const ModelManifold& m, const std::array<int, 3>& triple);

}  // namespace slagforge
