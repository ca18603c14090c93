#pragma once

#include "slagforge/scalar.hpp"

#include <vector>

namespace slagforge {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

Mat zeros(size_t rows, size_t cols);

// rank over the function field Q(i)(params).
// A random rational specialization is tried first; a full-rank specialization
// certifies the answer, otherwise fraction-free elimination decides.
size_t rank(const Mat& m);
size_t rank_fraction_free(const Mat& m);
size_t rank_at(const Mat& m, const std::vector<GaussRational>& point, bool* ok = nullptr);

// basis of {v : m v = 0}
std::vector<Vec> nullspace(const Mat& m);

// stack rows / select columns / select rows
Mat vstack(const Mat& a, const Mat& b);
Mat columns(const Mat& m, const std::vector<size_t>& cols);
Mat rows(const Mat& m, const std::vector<size_t>& rows);
Mat transpose(const Mat& m);

// incremental echelon basis of a span, used for representative selection
class SpanBasis {
 public:
  explicit SpanBasis(size_t dim) : dim_(dim) {}
  // true if v was independent (and is now included)
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  size_t size() const { return rows_.size(); }

 private:
  Vec reduce(const Vec& v) const;
  size_t dim_;
  std::vector<Vec> rows_;
  std::vector<size_t> pivots_;
};

struct RankStats {
  size_t filter_hits = 0;
  size_t symbolic_runs = 0;
};
RankStats rank_stats();

}  // namespace slagforge
