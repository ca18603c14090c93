#pragma once

#include "slagforge/scalar.hpp"

#include <array>
#include <string>

namespace slagforge {

// a + b√D, D square-free and positive; D = 1 encodes plain rationals
class QuadInt {
 public:
  QuadInt() : a_(0), b_(0), d_(1) {}
  QuadInt(long a) : a_(a), b_(0), d_(1) {}
  QuadInt(Rational a) : a_(std::move(a)), b_(0), d_(1) {}
  QuadInt(Rational a, Rational b, long D);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long D() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  int sign() const;  // sign of the real number
  QuadInt conj() const { return QuadInt(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  QuadInt inverse() const;
  QuadInt abs() const { return sign() < 0 ? -*this : *this; }
  QuadInt pow(int e) const;

  QuadInt operator-() const { return QuadInt(-a_, -b_, d_); }
  QuadInt& operator+=(const QuadInt& o);
  QuadInt& operator-=(const QuadInt& o);
  QuadInt& operator*=(const QuadInt& o);
  QuadInt& operator/=(const QuadInt& o) { return *this *= o.inverse(); }
  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
  friend QuadInt operator/(QuadInt x, const QuadInt& y) { return x /= y; }
  friend bool operator==(const QuadInt& x, const QuadInt& y);
  friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }

  std::string str() const;

 private:
  long join(const QuadInt& o) const;
  Rational a_, b_;
  long d_;
};

struct SqrtCheck {
  bool perfect_square = false;
  Integer root;         // when perfect_square
  Integer square_part;  // n = square_part² · D otherwise
  long D = 0;           // square-free part (sign carried for negative n)
};

SqrtCheck quad_sqrt_check(const Integer& n);

using QuadMat2 = std::array<std::array<QuadInt, 2>, 2>;
using IntMat2 = std::array<std::array<long, 2>, 2>;

QuadMat2 mul(const QuadMat2& x, const QuadMat2& y);
QuadMat2 to_quad(const IntMat2& m);
QuadInt det(const QuadMat2& m);
QuadMat2 inverse(const QuadMat2& m);
QuadMat2 transpose(const QuadMat2& m);
bool operator==(const QuadMat2& x, const QuadMat2& y);
std::string str(const QuadMat2& m);

}  // namespace slagforge
