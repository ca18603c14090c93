#pragma once

// Independent floating-point oracles: Chevalley-Eilenberg differentials rebuilt from the
// bracket table by the invariant formula, ranks via Eigen after numeric substitution.

#include "slagforge/model.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

using slagforge::GaussRational;
using slagforge::ModelManifold;
using slagforge::Scalar;

inline double to_double(const slagforge::Rational& q) { return q.get_d(); }

// substitute the named parameters; others are set to zero
inline double numeric(const Scalar& s, const std::vector<std::pair<std::string, slagforge::Rational>>& at) {
  std::vector<GaussRational> point(size_t(slagforge::ParamRegistry::count()), GaussRational(0));
  for (auto& [name, v] : at) point[size_t(slagforge::ParamRegistry::index(name))] = GaussRational(v);
  auto g = s.eval(point);
  if (!g) throw std::runtime_error("pole at the sample point");
  return to_double(g->re);
}

// c[i][j][t]: [E_i, E_j] = Σ_t c E_t
using BracketTable = std::vector<std::vector<std::vector<double>>>;

inline BracketTable bracket_table(const ModelManifold& m,
                                  const std::vector<std::pair<std::string, slagforge::Rational>>& at) {
  int n = m.dim;
  BracketTable c(size_t(n), std::vector<std::vector<double>>(size_t(n), std::vector<double>(size_t(n), 0.0)));
  for (auto& [ij, v] : slagforge::brackets(m))
    for (int t = 0; t < n; ++t) {
      double x = numeric(v[size_t(t)], at);
      c[size_t(ij.first)][size_t(ij.second)][size_t(t)] = x;
      c[size_t(ij.second)][size_t(ij.first)][size_t(t)] = -x;
    }
  return c;
}

inline std::vector<unsigned> subsets(int n, int k) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) == k) out.push_back(m);
  return out;
}

// e^I on basis vectors in the given (unsorted) order
inline double eval_on(unsigned I, const std::vector<int>& args) {
  unsigned J = 0;
  for (int a : args) {
    if (J & (1u << a)) return 0.0;
    J |= 1u << a;
  }
  if (J != I) return 0.0;
  // parity of the permutation sorting args
  int inv = 0;
  for (size_t p = 0; p < args.size(); ++p)
    for (size_t q = p + 1; q < args.size(); ++q) inv += args[p] > args[q];
  return inv % 2 ? -1.0 : 1.0;
}

// matrix of d: Λ^k → Λ^{k+1}, columns indexed by subsets(n, k), rows by subsets(n, k+1)
// dα(X_0..X_k) = Σ_{a<b} (-1)^{a+b} α([X_a, X_b], X_0..X̂_a..X̂_b..X_k)
inline Eigen::MatrixXd ce_matrix(const BracketTable& c, int n, int k) {
  auto src = subsets(n, k), dst = subsets(n, k + 1);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(Eigen::Index(dst.size()), Eigen::Index(src.size()));
  for (size_t col = 0; col < src.size(); ++col) {
    for (size_t row = 0; row < dst.size(); ++row) {
      std::vector<int> xs;
      for (int t = 0; t < n; ++t)
        if (dst[row] & (1u << t)) xs.push_back(t);
      double val = 0;
      for (size_t a = 0; a < xs.size(); ++a)
        for (size_t b = a + 1; b < xs.size(); ++b) {
          std::vector<int> rest;
          for (size_t r = 0; r < xs.size(); ++r)
            if (r != a && r != b) rest.push_back(xs[r]);
          double sign = (a + b) % 2 ? -1.0 : 1.0;
          const auto& br = c[size_t(xs[a])][size_t(xs[b])];
          for (int t = 0; t < n; ++t) {
            if (br[size_t(t)] == 0.0) continue;
            std::vector<int> args{t};
            args.insert(args.end(), rest.begin(), rest.end());
            val += sign * br[size_t(t)] * eval_on(src[col], args);
          }
        }
      D(Eigen::Index(row), Eigen::Index(col)) = val;
    }
  }
  return D;
}

inline Eigen::Index rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return lu.rank();
}

inline std::vector<size_t> invariant_betti(const BracketTable& c, int n) {
  std::vector<Eigen::Index> r(size_t(n + 1), 0);
  for (int k = 0; k < n; ++k) r[size_t(k)] = rank(ce_matrix(c, n, k));
  std::vector<size_t> b;
  for (int k = 0; k <= n; ++k) {
    auto dim = Eigen::Index(subsets(n, k).size());
    b.push_back(size_t(dim - r[size_t(k)] - (k ? r[size_t(k - 1)] : 0)));
  }
  return b;
}

}  // namespace oracle
