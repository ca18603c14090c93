#include "slagforge/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <random>

namespace slagforge {

namespace {
std::atomic<size_t> g_filter_hits{0}, g_symbolic{0};

std::vector<GaussRational> random_point(int nvars, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-97, 97), den(1, 31);
  std::vector<GaussRational> p;
  for (int k = 0; k < nvars; ++k) {
    long n = num(rng);
    if (n == 0) n = 53;
    p.emplace_back(Rational(n, den(rng)));
  }
  for (auto& x : p) x.re.canonicalize();
  return p;
}

int max_var(const Mat& m) {
  int v = -1;
  for (auto& r : m)
    for (auto& x : r) v = std::max(v, x.max_var());
  return v;
}
}  // namespace

RankStats rank_stats() { return {g_filter_hits.load(), g_symbolic.load()}; }

Mat zeros(size_t rows, size_t cols) { return Mat(rows, Vec(cols, Scalar(0))); }

size_t rank_at(const Mat& m, const std::vector<GaussRational>& point, bool* ok) {
  if (ok) *ok = true;
  if (m.empty()) return 0;
  size_t R = m.size(), C = m[0].size();
  std::vector<std::vector<GaussRational>> a(R, std::vector<GaussRational>(C));
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) {
      auto v = m[i][j].eval(point);
      if (!v) {
        if (ok) *ok = false;
        return 0;
      }
      a[i][j] = *v;
    }
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && a[p][c].is_zero()) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    GaussRational inv = a[r][c].inverse();
    for (size_t i = r + 1; i < R; ++i) {
      if (a[i][c].is_zero()) continue;
      GaussRational f = a[i][c] * inv;
      for (size_t j = c; j < C; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

size_t rank_fraction_free(const Mat& m) {
  if (m.empty()) return 0;
  size_t R = m.size(), C = m[0].size();
  // clear denominators row by row so every entry is a polynomial
  std::vector<std::vector<Poly>> a(R, std::vector<Poly>(C));
  for (size_t i = 0; i < R; ++i) {
    Poly l(1);
    for (auto& x : m[i])
      if (!x.den().is_constant()) l = divexact(l * x.den(), gcd(l, x.den()));
    for (size_t j = 0; j < C; ++j) a[i][j] = m[i][j].num() * divexact(l, m[i][j].den());
  }
  size_t r = 0;
  Poly prev(1);
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && a[p][c].is_zero()) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < R; ++i) {
      for (size_t j = c + 1; j < C; ++j) {
        Poly t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = divexact(t, prev);
      }
      a[i][c] = Poly();
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

size_t rank(const Mat& m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t full = std::min(m.size(), m[0].size());
  int nv = max_var(m) + 1;
  if (nv == 0) {
    bool ok;
    return rank_at(m, {}, &ok);
  }
  thread_local std::mt19937_64 rng(0x51a6f0e9ULL);
  bool ok = false;
  size_t r = rank_at(m, random_point(nv, rng), &ok);
  if (ok && r == full) {
    ++g_filter_hits;
    return r;
  }
  ++g_symbolic;
  return rank_fraction_free(m);
}

std::vector<Vec> nullspace(const Mat& m) {
  if (m.empty()) return {};
  size_t R = m.size(), C = m[0].size();
  Mat a = m;
  std::vector<size_t> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && a[p][c].is_zero()) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    Scalar inv = a[r][c].inverse();
    for (size_t j = c; j < C; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (size_t j = c; j < C; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<Vec> basis;
  std::vector<bool> is_piv(C, false);
  for (auto c : pivcol) is_piv[c] = true;
  for (size_t f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    Vec v(C, Scalar(0));
    v[f] = Scalar(1);
    for (size_t k = 0; k < pivcol.size(); ++k) v[pivcol[k]] = -a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat vstack(const Mat& a, const Mat& b) {
  Mat r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Mat columns(const Mat& m, const std::vector<size_t>& cols) {
  Mat r(m.size(), Vec(cols.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t k = 0; k < cols.size(); ++k) r[i][k] = m[i][cols[k]];
  return r;
}

Mat rows(const Mat& m, const std::vector<size_t>& idx) {
  Mat r;
  for (auto i : idx) r.push_back(m[i]);
  return r;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat r(m[0].size(), Vec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
  return r;
}

Vec SpanBasis::reduce(const Vec& v) const {
  Vec w = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    size_t p = pivots_[k];
    if (w[p].is_zero()) continue;
    Scalar f = w[p];
    for (size_t j = 0; j < dim_; ++j)
      if (!rows_[k][j].is_zero()) w[j] -= f * rows_[k][j];
  }
  return w;
}

bool SpanBasis::contains(const Vec& v) const {
  Vec w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool SpanBasis::add(const Vec& v) {
  Vec w = reduce(v);
  size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = w[p].inverse();
  for (auto& x : w) x *= inv;
  // keep existing rows reduced against the new pivot
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Scalar f = row[p];
    for (size_t j = 0; j < dim_; ++j)
      if (!w[j].is_zero()) row[j] -= f * w[j];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace slagforge
