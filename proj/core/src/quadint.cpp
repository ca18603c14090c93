#include "slagforge/quadint.hpp"

#include <stdexcept>

namespace slagforge {

QuadInt::QuadInt(Rational a, Rational b, long D) : a_(std::move(a)), b_(std::move(b)), d_(D) {
  if (D < 1) throw std::invalid_argument("QuadInt needs a positive radicand");
  if (sgn(b_) == 0) d_ = 1;
  if (d_ == 1 && sgn(b_) != 0) {
    a_ += b_;
    b_ = 0;
  }
}

long QuadInt::join(const QuadInt& o) const {
  if (is_rational()) return o.d_;
  if (o.is_rational()) return d_;
  if (d_ != o.d_) throw std::invalid_argument("QuadInt radicands differ");
  return d_;
}

int QuadInt::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a² with D b²
  Rational lhs = a_ * a_, rhs = Rational(d_) * b_ * b_;
  int c = cmp(lhs, rhs);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

QuadInt QuadInt::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("QuadInt inverse of zero");
  return QuadInt(a_ / n, -b_ / n, d_);
}

QuadInt QuadInt::pow(int e) const {
  QuadInt base = e < 0 ? inverse() : *this;
  QuadInt r(1);
  for (int k = 0; k < std::abs(e); ++k) r *= base;
  return r;
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
  long D = join(o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = sgn(b_) == 0 ? 1 : D;
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) { return *this += -o; }

QuadInt& QuadInt::operator*=(const QuadInt& o) {
  long D = join(o);
  Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = sgn(b_) == 0 ? 1 : D;
  return *this;
}

bool operator==(const QuadInt& x, const QuadInt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.is_rational() || x.d_ == y.d_;
}

std::string QuadInt::str() const {
  if (is_rational()) return a_.get_str();
  std::string rad = "√" + std::to_string(d_);
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str();
  if (b_ == 1)
    s += (s.empty() ? "" : "+") + rad;
  else if (b_ == -1)
    s += "-" + rad;
  else {
    if (sgn(b_) > 0 && !s.empty()) s += "+";
    s += b_.get_str() + rad;
  }
  return s;
}

SqrtCheck quad_sqrt_check(const Integer& n) {
  SqrtCheck r;
  if (sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t())) {
    r.perfect_square = true;
    mpz_sqrt(r.root.get_mpz_t(), n.get_mpz_t());
    r.square_part = r.root;
    r.D = sgn(n) == 0 ? 0 : 1;
    return r;
  }
  Integer m = abs(n), sq = 1, free = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    for (int j = 0; j < k / 2; ++j) sq *= p;
    if (k % 2) free *= p;
  }
  free *= m;
  r.square_part = sq;
  r.D = free.get_si() * (sgn(n) < 0 ? -1 : 1);
  return r;
}

QuadMat2 mul(const QuadMat2& x, const QuadMat2& y) {
  QuadMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

QuadMat2 to_quad(const IntMat2& m) {
  QuadMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = QuadInt(m[i][j]);
  return r;
}

QuadInt det(const QuadMat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

QuadMat2 inverse(const QuadMat2& m) {
  QuadInt d = det(m);
  if (d.is_zero()) throw std::domain_error("singular 2x2 matrix");
  QuadInt di = d.inverse();
  QuadMat2 r;
  r[0][0] = m[1][1] * di;
  r[0][1] = -m[0][1] * di;
  r[1][0] = -m[1][0] * di;
  r[1][1] = m[0][0] * di;
  return r;
}

QuadMat2 transpose(const QuadMat2& m) {
  QuadMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = m[j][i];
  return r;
}

bool operator==(const QuadMat2& x, const QuadMat2& y) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (x[i][j] != y[i][j]) return false;
  return true;
}

std::string str(const QuadMat2& m) {
  return "(" + m[0][0].str() + " " + m[0][1].str() + "; " + m[1][0].str() + " " + m[1][1].str() + ")";
}

}  // namespace slagforge
