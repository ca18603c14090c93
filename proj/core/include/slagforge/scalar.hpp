#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slagforge {

using Rational = mpq_class;
using Integer = mpz_class;

struct MalformedScalar : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a + b i with a, b rational
struct GaussRational {
  Rational re, im;

  GaussRational() = default;
  GaussRational(long v) : re(v), im(0) {}
  GaussRational(const Rational& r) : re(r), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  GaussRational inverse() const;

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
  // total order used for canonical containers only
  friend int compare(const GaussRational& a, const GaussRational& b);

  std::string str() const;
};

// Global parameter symbols (λ, τ, ...). Indices are stable for the process lifetime.
class ParamRegistry {
 public:
  static int index(const std::string& name);
  static std::optional<int> find(const std::string& name);
  static std::string name(int idx);
  static std::string display(int idx);
  static int count();
};

// exponent vector, trailing zeros trimmed
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<uint32_t> e);
  static Monomial var(int v, uint32_t power = 1);

  uint32_t exp(int v) const { return v < int(e_.size()) ? e_[v] : 0; }
  int size() const { return int(e_.size()); }
  uint32_t total_degree() const;
  bool is_one() const { return e_.empty(); }
  bool divides(const Monomial& o) const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides
  Monomial without(int v) const;

  // lex order, variable 0 most significant
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  const std::vector<uint32_t>& exps() const { return e_; }

 private:
  void trim();
  std::vector<uint32_t> e_;
};

// sparse multivariate polynomial over Q(i)
class Poly {
 public:
  using TermMap = std::map<Monomial, GaussRational>;

  Poly() = default;
  Poly(long c);
  Poly(const GaussRational& c);
  Poly(const Monomial& m, const GaussRational& c);
  static Poly param(int idx);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
  GaussRational constant() const;  // value if constant
  int max_var() const;            // -1 for constants
  uint32_t degree(int v) const;
  uint32_t total_degree() const;
  const TermMap& terms() const { return t_; }
  const Monomial& leading_monomial() const { return t_.rbegin()->first; }
  const GaussRational& leading_coeff() const { return t_.rbegin()->second; }

  // coefficients with respect to one variable
  std::map<uint32_t, Poly> coeffs(int v) const;
  Poly coeff(int v, uint32_t d) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& scale(const GaussRational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend int compare(const Poly& a, const Poly& b);

  Poly conj() const;
  Poly monic() const;
  std::optional<GaussRational> eval(const std::vector<GaussRational>& point) const;

  std::string str() const;

  friend Poly divexact(const Poly& a, const Poly& b);
  friend Poly gcd(const Poly& a, const Poly& b);

 private:
  void add_term(const Monomial& m, const GaussRational& c);
  TermMap t_;
};

Poly divexact(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
Poly pseudo_remainder(const Poly& a, const Poly& b, int v);
Poly content(const Poly& a, int v);

// canonical element of Q(i)(params): gcd(num, den) = 1, den monic in lex order
class Scalar {
 public:
  Scalar() : num_(0), den_(1) {}
  Scalar(int v) : num_(long(v)), den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}
  Scalar(const Rational& r) : num_(GaussRational(r)), den_(1) {}
  Scalar(const GaussRational& g) : num_(g), den_(1) {}
  Scalar(Poly num);
  Scalar(Poly num, Poly den);  // normalizes; throws MalformedScalar on zero den

  static Scalar i() { return Scalar(GaussRational::i()); }
  static Scalar param(const std::string& name);
  static Scalar rational(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return Scalar(r);
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussRational constant() const;
  std::optional<Rational> as_rational() const;
  bool is_real() const;  // all coefficients real

  Scalar conj() const;
  Scalar inverse() const;
  Scalar pow(int e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);

  // substitution homomorphism; nullopt when the denominator vanishes
  std::optional<GaussRational> eval(const std::vector<GaussRational>& point) const;
  int max_var() const;

  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

// normalize an arbitrary fraction
Scalar normalize(const Poly& num, const Poly& den);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace slagforge
