#pragma once

#include "slagforge/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slagforge {

struct CohomologyGroup {
  size_t dim = 0;
  std::vector<WeightedForm> representatives;  // real coframe
};

struct CohomologyTable {
  std::string kind;       // derham, bottchern, tsengyau
  std::string model;
  bool bigraded = false;  // keys (p, q); otherwise (k, 0)
  std::map<std::pair<int, int>, CohomologyGroup> groups;
  std::vector<Character> characters;  // admissible characters used

  size_t dim(int p, int q = 0) const;
  std::vector<size_t> betti() const;            // total dimension per degree
  std::vector<size_t> row(int degree) const;    // bigraded: (degree,0), (degree-1,1), ..., (0,degree)
  std::string str(const ModelManifold& m) const;
};

// products of declared weights with multipliers in {-2..2}
std::vector<Character> weight_candidates(const ModelManifold& m);
std::vector<Character> admissible_characters(const ModelManifold& m);

// copy of m with the active τ-mode rational replaced (nullopt = generic)
ModelManifold with_tau_mode(const ModelManifold& m, std::optional<Rational> q);

CohomologyTable de_rham(const ModelManifold& m);
int dolbeault_h10(const ModelManifold& m);
// fiber = 0 selects the model's declared polarization
CohomologyTable refined_bott_chern(const ModelManifold& m, Mask fiber = 0);
CohomologyTable refined_tseng_yau(const ModelManifold& m, Mask fiber = 0);

struct DiamondCheck {
  bool pass = false;
  CohomologyTable tseng_yau, bott_chern;
  std::vector<std::string> mismatches;
};

// h^{p,q}_TY(x) = h^{n-p,q}_BC(x̌)
DiamondCheck mirror_diamond_check(const ModelManifold& x, const ModelManifold& x_check);

// block-level rank-nullity: rank d_k + dim ker d_k = block size for every character and k
bool rank_nullity_holds(const ModelManifold& m);

}  // namespace slagforge
