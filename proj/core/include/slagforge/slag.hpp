#pragma once

#include "slagforge/model.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace slagforge {

// 3 rows of frame coefficients; row r holds x_{6r+1} .. x_{6r+6}
struct DistributionMatrix {
  std::array<Vec, 3> rows;

  static DistributionMatrix axis(const std::array<int, 3>& triple);  // 1-based
  static DistributionMatrix generic();  // entries x1 .. x18
  static DistributionMatrix parse(const std::string& text);
  size_t rank() const;
};

enum class Phase { Zero, MinusHalfPi };

Phase parse_phase(const std::string& s);
std::string phase_name(Phase p);

struct SlagSystem {
  Phase phase = Phase::Zero;
  // ω on the row pairs (1,2), (1,3), (2,3), then the calibration on (1,2,3); polynomials in x1..x18
  std::array<Scalar, 4> equations;
  std::array<int, 18> variables{};  // parameter registry indices of x1..x18

  std::string str() const;
};

// the calibrating 3-form Im(e^{-iθ}Ω)
WeightedForm calibration(const ModelManifold& m, Phase p);

SlagSystem build_system(const ModelManifold& m, Phase p);

struct Residuals {
  std::array<Scalar, 4> values;
  bool degenerate = false;  // rank of A below 3
  bool zero() const;
};

Residuals eval_system(const SlagSystem& s, const DistributionMatrix& a);
// same residuals by direct evaluation of ω and the calibration on the rows
Residuals eval_direct(const ModelManifold& m, Phase p, const DistributionMatrix& a);

struct Involutivity {
  bool involutive = true;
  std::optional<std::pair<int, int>> witness;  // 0-based pair whose bracket leaves the span
  std::string witness_text;
};

Involutivity involutive(const ModelManifold& m, const std::array<int, 3>& triple);

struct ScanHit {
  std::array<int, 3> triple;  // 1-based ascending
  Involutivity involutivity;
};

std::vector<ScanHit> scan_axis(const ModelManifold& m, Phase p);

std::string triple_name(const std::array<int, 3>& t);
std::array<int, 3> parse_triple(const std::string& s);  // "123" or "1,2,3"

}  // namespace slagforge
