#pragma once

#include "slagforge/linalg.hpp"
#include "slagforge/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace slagforge {

using Mask = uint32_t;  // bit k <-> θ^{k+1}

inline int degree(Mask m) { return __builtin_popcount(m); }
// sign of θ^A ∧ θ^B rearranged to ascending order (0 if they overlap)
int wedge_sign(Mask a, Mask b);
std::vector<int> indices(Mask m);  // 0-based, ascending
Mask mask_of(const std::vector<int>& one_based);

// exp(Σ c_w x_w) over the weight directions of a frame
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<Scalar> c);
  static Character along(int direction, const Scalar& c);

  bool trivial() const { return c_.empty(); }
  const Scalar& coeff(int w) const;
  int size() const { return int(c_.size()); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Character operator*(const Character& o) const;  // adds exponents
  Character inverse() const;
  Character conj() const;
  Character pow(int k) const;

  friend bool operator<(const Character& a, const Character& b);
  friend bool operator==(const Character& a, const Character& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Σ character · scalar · θ^I
class WeightedForm {
 public:
  using Key = std::pair<Character, Mask>;
  using TermMap = std::map<Key, Scalar>;

  WeightedForm() = default;
  WeightedForm(const Scalar& s);
  static WeightedForm mono(Mask m, const Scalar& c = Scalar(1), const Character& ch = Character());
  static WeightedForm theta(int one_based);

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }
  void add(const Character& ch, Mask m, const Scalar& c);
  Scalar coeff(Mask m, const Character& ch = Character()) const;
  // degree of a homogeneous form, -1 for zero or mixed
  int degree() const;
  bool invariant() const;  // only the trivial character occurs

  WeightedForm operator-() const;
  WeightedForm& operator+=(const WeightedForm& o);
  WeightedForm& operator-=(const WeightedForm& o);
  WeightedForm& operator*=(const Scalar& s);
  friend WeightedForm operator+(WeightedForm a, const WeightedForm& b) { return a += b; }
  friend WeightedForm operator-(WeightedForm a, const WeightedForm& b) { return a -= b; }
  friend WeightedForm operator*(const Scalar& s, WeightedForm f) { return f *= s; }
  friend WeightedForm operator*(WeightedForm f, const Scalar& s) { return f *= s; }
  friend bool operator==(const WeightedForm& a, const WeightedForm& b) { return a.t_ == b.t_; }
  friend bool operator!=(const WeightedForm& a, const WeightedForm& b) { return !(a == b); }

  WeightedForm conj() const;
  WeightedForm re() const;
  WeightedForm im() const;
  WeightedForm times(const Character& ch) const;
  WeightedForm part(int deg) const;
  // annihilate θ^m for m outside keep
  WeightedForm restrict_to(Mask keep) const;
  WeightedForm map_scalars(Scalar (*f)(const Scalar&)) const;

  std::string str(const std::vector<std::string>& dir_names = {}, const char* gen = "θ") const;

 private:
  TermMap t_;
};

WeightedForm wedge(const WeightedForm& a, const WeightedForm& b);
WeightedForm power(const WeightedForm& a, int k);
// exp of an even form, terminating by nilpotency
WeightedForm exp_form(const WeightedForm& a);

// invariant structure data: dθ^i as 2-forms, weight directions
class Frame {
 public:
  Frame() = default;
  Frame(int dim, std::vector<std::vector<std::pair<Mask, Scalar>>> dtheta,
        std::vector<std::string> dir_names, std::vector<int> dir_index);
  static Frame flat(int dim, std::vector<std::string> dir_names = {}, std::vector<int> dir_index = {});

  int dim() const { return dim_; }
  Mask full() const { return dim_ == 32 ? ~Mask(0) : ((Mask(1) << dim_) - 1); }
  const std::vector<std::pair<Mask, Scalar>>& dtheta(int i) const { return dtheta_[i]; }
  const std::vector<std::pair<Mask, Scalar>>& dmono(Mask m) const { return dmono_[m]; }
  int directions() const { return int(dir_index_.size()); }
  int direction_index(int w) const { return dir_index_[w]; }
  const std::vector<std::string>& direction_names() const { return dir_names_; }
  int direction(const std::string& name) const;  // -1 if absent

 private:
  int dim_ = 0;
  std::vector<std::vector<std::pair<Mask, Scalar>>> dtheta_;
  std::vector<std::vector<std::pair<Mask, Scalar>>> dmono_;
  std::vector<std::string> dir_names_;
  std::vector<int> dir_index_;
};

// ---------------------------------------------------------------- operators

WeightedForm d(const WeightedForm& f, const Frame& fr);
WeightedForm interior(int e, const WeightedForm& f);  // 0-based frame vector
WeightedForm interior(const Vec& v, const WeightedForm& f);
// f(v_1, ..., v_k) for invariant f
Scalar evaluate(const WeightedForm& f, const std::vector<Vec>& vectors);
// Riemannian star on the orthonormal coframe spanned by support, oriented ascending
WeightedForm hodge_star(const WeightedForm& f, Mask support);

// J E_{a_k} = E_{b_k}; the (1,0)-forms are φ^k = θ^{a_k} + i θ^{b_k}
class ComplexFrame {
 public:
  ComplexFrame() = default;
  explicit ComplexFrame(std::vector<std::pair<int, int>> pairs);  // 0-based (a_k, b_k)
  int n() const { return int(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  // images of single monomials
  const std::vector<std::pair<Mask, Scalar>>& real_to_complex(Mask m) const { return r2c_[m]; }
  const std::vector<std::pair<Mask, Scalar>>& complex_to_real(Mask m) const { return c2r_[m]; }

 private:
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<std::pair<Mask, Scalar>>> r2c_, c2r_;
};

// complex-basis coordinates: bit k <-> φ^{k+1}, bit n+k <-> φ̄^{k+1}
WeightedForm to_complex(const WeightedForm& f, const ComplexFrame& cf);
WeightedForm from_complex(const WeightedForm& f, const ComplexFrame& cf);
std::pair<int, int> bidegree(Mask complex_mask, int n);
std::map<std::pair<int, int>, WeightedForm> bidegree_split(const WeightedForm& f, const ComplexFrame& cf);
WeightedForm project(const WeightedForm& f, const ComplexFrame& cf, int p, int q);
WeightedForm del(const WeightedForm& f, const Frame& fr, const ComplexFrame& cf);
WeightedForm delbar(const WeightedForm& f, const Frame& fr, const ComplexFrame& cf);

struct DegenerateForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Λ = Σ_{a<b} π^{ab} ι_{E_b} ι_{E_a} with π = -W^{-1}, W the matrix of ω
class Lefschetz {
 public:
  Lefschetz(const WeightedForm& omega, int dim);
  WeightedForm lambda(const WeightedForm& f) const;
  WeightedForm L(const WeightedForm& f) const { return wedge(omega_, f); }
  const Mat& bivector() const { return pi_; }

 private:
  WeightedForm omega_;
  int dim_;
  Mat pi_;
};

WeightedForm d_lambda(const WeightedForm& f, const Frame& fr, const Lefschetz& lf);

}  // namespace slagforge
