#include "slagforge/slag.hpp"

#include "slagforge/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace slagforge {

namespace {

std::array<int, 18> x_vars() {
  std::array<int, 18> v{};
  for (int k = 0; k < 18; ++k) v[k] = ParamRegistry::index("x" + std::to_string(k + 1));
  return v;
}

Scalar power_of(const Scalar& s, uint32_t e) {
  Scalar r(1);
  for (uint32_t k = 0; k < e; ++k) r *= s;
  return r;
}

// replace the listed parameters by scalars; other parameters stay symbolic
Scalar substitute(const Poly& p, const std::map<int, Scalar>& values) {
  Scalar out(0);
  for (auto& [mono, c] : p.terms()) {
    Scalar term{Scalar(c)};
    for (int v = 0; v < mono.size(); ++v) {
      uint32_t e = mono.exp(v);
      if (!e) continue;
      auto it = values.find(v);
      term *= it != values.end() ? power_of(it->second, e) : Scalar(Poly(Monomial::var(v, e), GaussRational(1)));
    }
    out += term;
  }
  return out;
}

}  // namespace

DistributionMatrix DistributionMatrix::axis(const std::array<int, 3>& triple) {
  DistributionMatrix a;
  for (int r = 0; r < 3; ++r) {
    a.rows[r] = Vec(6, Scalar(0));
    if (triple[r] < 1 || triple[r] > 6) throw DomainError("frame index out of range");
    a.rows[r][triple[r] - 1] = Scalar(1);
  }
  return a;
}

DistributionMatrix DistributionMatrix::generic() {
  auto v = x_vars();
  DistributionMatrix a;
  for (int r = 0; r < 3; ++r) {
    a.rows[r] = Vec(6);
    for (int c = 0; c < 6; ++c) a.rows[r][c] = Scalar(Poly::param(v[6 * r + c]));
  }
  return a;
}

DistributionMatrix DistributionMatrix::parse(const std::string& text) {
  auto m = parse_matrix(text, 3, 6);
  DistributionMatrix a;
  for (int r = 0; r < 3; ++r) a.rows[r] = m[r];
  return a;
}

size_t DistributionMatrix::rank() const { return slagforge::rank(Mat(rows.begin(), rows.end())); }

Phase parse_phase(const std::string& s) {
  if (s == "0") return Phase::Zero;
  if (s == "-pi/2" || s == "-π/2" || s == "−π/2") return Phase::MinusHalfPi;
  throw ParseError("phase must be 0 or -pi/2, got \"" + s + "\"");
}

std::string phase_name(Phase p) { return p == Phase::Zero ? "0" : "-pi/2"; }

WeightedForm calibration(const ModelManifold& m, Phase p) {
  // Im(e^{iπ/2}Ω) = Re Ω
  return p == Phase::Zero ? m.Omega.im() : m.Omega.re();
}

std::string SlagSystem::str() const {
  std::string s;
  for (auto& e : equations) s += e.str() + " = 0\n";
  return s;
}

SlagSystem build_system(const ModelManifold& m, Phase p) {
  if (m.dim != 6) throw DomainError("the SLag system is defined for 6-dimensional models");
  SlagSystem s;
  s.phase = p;
  s.variables = x_vars();
  auto a = DistributionMatrix::generic();
  auto& r = a.rows;
  s.equations[0] = evaluate(m.omega, {r[0], r[1]});
  s.equations[1] = evaluate(m.omega, {r[0], r[2]});
  s.equations[2] = evaluate(m.omega, {r[1], r[2]});
  s.equations[3] = evaluate(calibration(m, p), {r[0], r[1], r[2]});
  return s;
}

bool Residuals::zero() const {
  for (auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

Residuals eval_system(const SlagSystem& s, const DistributionMatrix& a) {
  std::map<int, Scalar> values;
  for (int k = 0; k < 18; ++k) values[s.variables[k]] = a.rows[k / 6][k % 6];
  Residuals out;
  for (int e = 0; e < 4; ++e) {
    const Scalar& eq = s.equations[e];
    out.values[e] = substitute(eq.num(), values) / substitute(eq.den(), values);
  }
  out.degenerate = a.rank() < 3;
  return out;
}

Residuals eval_direct(const ModelManifold& m, Phase p, const DistributionMatrix& a) {
  Residuals out;
  auto& r = a.rows;
  out.values[0] = evaluate(m.omega, {r[0], r[1]});
  out.values[1] = evaluate(m.omega, {r[0], r[2]});
  out.values[2] = evaluate(m.omega, {r[1], r[2]});
  out.values[3] = evaluate(calibration(m, p), {r[0], r[1], r[2]});
  out.degenerate = a.rank() < 3;
  return out;
}

Involutivity involutive(const ModelManifold& m, const std::array<int, 3>& triple) {
  Involutivity res;
  Mask span = mask_of({triple[0], triple[1], triple[2]});
  if (degree(span) != 3) throw DomainError("triple must have distinct entries");
  for (int a = 0; a < 3 && res.involutive; ++a)
    for (int b = a + 1; b < 3; ++b) {
      int i = triple[a] - 1, j = triple[b] - 1;
      for (int t = 0; t < m.dim; ++t) {
        if (span & (Mask(1) << t)) continue;
        if (!m.f(t, i, j).is_zero()) {
          res.involutive = false;
          res.witness = std::pair{i, j};
          res.witness_text = bracket_string(m, i, j);
          break;
        }
      }
      if (!res.involutive) break;
    }
  return res;
}

std::vector<ScanHit> scan_axis(const ModelManifold& m, Phase p) {
  SlagSystem s = build_system(m, p);
  std::vector<std::array<int, 3>> triples;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k) triples.push_back({i, j, k});
  std::vector<char> hit(triples.size(), 0);
  parallel_for(triples.size(), [&](size_t n) { hit[n] = eval_system(s, DistributionMatrix::axis(triples[n])).zero(); });
  std::vector<ScanHit> out;
  for (size_t n = 0; n < triples.size(); ++n)
    if (hit[n]) out.push_back({triples[n], involutive(m, triples[n])});
  return out;
}

std::string triple_name(const std::array<int, 3>& t) {
  return std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
}

std::array<int, 3> parse_triple(const std::string& s) {
  std::vector<int> v;
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    if (c < '1' || c > '9') throw ParseError("triple must list three frame indices, got \"" + s + "\"");
    v.push_back(c - '0');
  }
  if (v.size() != 3) throw ParseError("triple must list three frame indices, got \"" + s + "\"");
  std::array<int, 3> t{v[0], v[1], v[2]};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw ParseError("triple entries must be distinct");
  return t;
}

}  // namespace slagforge
