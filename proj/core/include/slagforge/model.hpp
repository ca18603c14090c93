#pragma once

#include "slagforge/form.hpp"
#include "slagforge/parse.hpp"
#include "slagforge/quadint.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slagforge {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownModel : ModelError {
  using ModelError::ModelError;
};

// a well-formed request the mathematics rejects (non-involutive triple, missing foliation, ...)
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The period of the y-lattice direction is τ (or τ⁻¹ when inverted) with period·unit = 2πq.
struct TauMode {
  Scalar unit = Scalar(1);
  std::optional<Rational> q_tau;
  std::optional<Rational> q_inv;
  bool inverted = false;

  std::optional<Rational> active_q() const { return inverted ? q_inv : q_tau; }
  void set_active_q(std::optional<Rational> q) { (inverted ? q_inv : q_tau) = std::move(q); }
  std::string describe() const;
};

// action of one lattice generator family on a coordinate
struct CoordAction {
  enum class Kind { Shift, Torus };
  std::string name;
  Kind kind = Kind::Shift;
  char group = 'a';  // a: x-lattice, b: y-lattice
  int sign = 1;      // torus: multiplier e^{sign·λ·a}
  int row = 0;       // torus: row of P giving the offset
};

struct Foliation {
  std::string id;
  std::array<int, 3> triple{};  // 1-based
  std::vector<std::string> transverse;
  bool section = false;
};

struct LatticeSpec {
  bool present = false;
  IntMat2 M{};
  TauMode tau;
  std::string shift_direction, period_direction;
  std::vector<CoordAction> coords;
};

// flat torus-bundle description used by the Fourier-Mukai transform
struct FlatData {
  bool present = false;
  WeightedForm omega_check;              // on the 9 flat generators
  Scalar fiber_volume = Scalar(1);
  std::map<int, WeightedForm> dictionary;  // flat generator (0-based) -> model form
  std::map<int, int> direction_map;        // flat direction -> model direction
  std::string dual_name, dual_via;
};

enum ModelKind : unsigned { kComplex = 1, kSymplectic = 2 };

class ModelManifold {
 public:
  std::string name;
  unsigned kind = kComplex;
  int dim = 0;
  std::vector<std::string> params;
  // f^i_{jk} for j<k, 0-based keys
  std::map<std::array<int, 3>, Scalar> structure;
  // J E_k = jsign[k] E_{jmap[k]}
  std::vector<int> jmap;
  std::vector<int> jsign;
  std::vector<std::pair<int, int>> jpairs;  // (a, b) with J E_a = E_b
  WeightedForm omega, Omega;
  std::vector<std::string> direction_names;
  std::vector<int> direction_index;
  std::vector<Character> weight_basis;
  std::vector<WeightedForm> h10_generators;
  LatticeSpec lattice;
  std::vector<Foliation> foliations;
  Mask polarization_fiber = 0;
  FlatData flat;
  std::string source;

  static ModelManifold from_text(const std::string& text);

  const Frame& frame() const { return frame_; }
  const ComplexFrame& complex_frame() const { return cframe_; }
  FormContext context() const;
  bool is_complex() const { return kind & kComplex; }
  bool is_symplectic() const { return kind & kSymplectic; }

  Scalar f(int i, int j, int k) const;  // antisymmetric in (j,k), 0-based
  const Foliation* foliation(const std::string& id) const;
  Mask full() const { return frame_.full(); }
  Mask base_mask() const { return full() & ~polarization_fiber; }

  // rebuilds frames after edits to structure constants or J
  void finalize();

 private:
  Frame frame_;
  ComplexFrame cframe_;
};

ModelManifold builtin(const std::string& name);
std::vector<std::string> builtin_names();
const std::string& builtin_source(const std::string& name);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ConsistencyReport {
  std::vector<Check> checks;
  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

ConsistencyReport consistency_report(const ModelManifold& m);

// [E_i, E_j] = Σ_t c_t E_t, keys 0-based with i<j, zero brackets omitted
std::map<std::pair<int, int>, Vec> brackets(const ModelManifold& m);
std::string bracket_string(const ModelManifold& m, int i, int j);
std::string structure_equations(const ModelManifold& m);

}  // namespace slagforge
