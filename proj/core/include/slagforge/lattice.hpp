#pragma once

#include "slagforge/model.hpp"
#include "slagforge/quadint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slagforge {

struct EigenData {
  IntMat2 M{};
  SqrtCheck discriminant;  // of Tr(M)² - 4
  QuadInt expanding, contracting;  // e^{λ} and e^{-λ}
  QuadMat2 P;  // rows are left eigenvectors: P M P⁻¹ = diag(expanding, contracting)
  bool irrational = false;
};

EigenData eigen_data(const IntMat2& M);
IntMat2 parse_int_mat2(const std::string& s);  // "m11,m12,m21,m22"

struct SearchResult {
  std::optional<IntMat2> witness;  // integer M' with nonzero columns and P M' diagonal
  size_t candidates = 0;           // column vectors examined
};

SearchResult diag_integer_matrix_search(const IntMat2& M, int bound);

struct ClosureVerdict {
  enum class Kind { ClosedIff, NeverClosed, AlwaysClosed };
  Kind kind = Kind::NeverClosed;
  std::vector<std::string> condition;  // leaf parameters that must vanish
  std::vector<std::string> parameters;  // A, B, C for the transverse coordinates in order
  // stabilizer rank of the leaf for each set of vanishing parameters (bit p <-> parameter p is 0)
  std::array<int, 8> stabilizer_rank{};

  std::string str() const;
};

std::string kind_name(ClosureVerdict::Kind k);

ClosureVerdict classify_leaf_closure(const ModelManifold& m, const std::string& foliation_id);

bool character_trivial(const Character& c, const ModelManifold& m);

struct BundleCheck {
  bool ok = false;
  std::string detail;
};

// span_Z of the fiber lattice is preserved when the base coordinate moves by one period
BundleCheck verify_lattice_bundle(const IntMat2& M, const QuadMat2& P);
BundleCheck verify_lattice_bundle(const ModelManifold& m);

// diag(μ, μ⁻¹) P M^a P⁻¹ diag(μ⁻¹, μ) equals diag(e^{λa}, e^{-λa}) as Laurent polynomials in μ
bool verify_torus_conjugation(const IntMat2& M, int a);

}  // namespace slagforge
