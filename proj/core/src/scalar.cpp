#include "slagforge/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace slagforge {

// ---------------------------------------------------------------- Gaussian

GaussRational GaussRational::inverse() const {
  Rational n = re * re + im * im;
  if (sgn(n) == 0) throw MalformedScalar("division by zero");
  return {re / n, -im / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (sgn(o.im) == 0) {
    if (sgn(o.re) == 0) throw MalformedScalar("division by zero");
    re /= o.re;
    im /= o.re;
    return *this;
  }
  return *this *= o.inverse();
}

int compare(const GaussRational& a, const GaussRational& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(a.im, b.im);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string GaussRational::str() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "i";
  }
  std::string s = "(" + re.get_str();
  if (sgn(im) > 0) s += "+";
  if (im == 1)
    s += "i";
  else if (im == -1)
    s += "-i";
  else
    s += im.get_str() + "i";
  return s + ")";
}

// ---------------------------------------------------------------- params

namespace {
struct Registry {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> idx;
};
Registry& registry() {
  static Registry r;
  return r;
}
}  // namespace

int ParamRegistry::index(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.idx.find(name);
  if (it != r.idx.end()) return it->second;
  int k = int(r.names.size());
  r.names.push_back(name);
  r.idx.emplace(name, k);
  return k;
}

std::optional<int> ParamRegistry::find(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.idx.find(name);
  if (it == r.idx.end()) return std::nullopt;
  return it->second;
}

std::string ParamRegistry::name(int idx) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.names.at(idx);
}

std::string ParamRegistry::display(int idx) {
  std::string n = name(idx);
  if (n == "lambda") return "λ";
  if (n == "tau") return "τ";
  if (n == "mu") return "μ";
  return n;
}

int ParamRegistry::count() {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return int(r.names.size());
}

// ---------------------------------------------------------------- monomials

Monomial::Monomial(std::vector<uint32_t> e) : e_(std::move(e)) { trim(); }

Monomial Monomial::var(int v, uint32_t power) {
  std::vector<uint32_t> e(v + 1, 0);
  e[v] = power;
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

uint32_t Monomial::total_degree() const {
  uint32_t s = 0;
  for (auto x : e_) s += x;
  return s;
}

bool Monomial::divides(const Monomial& o) const {
  if (e_.size() > o.e_.size()) return false;
  for (size_t k = 0; k < e_.size(); ++k)
    if (e_[k] > o.e_[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<uint32_t> e(std::max(e_.size(), o.e_.size()), 0);
  for (size_t k = 0; k < e_.size(); ++k) e[k] += e_[k];
  for (size_t k = 0; k < o.e_.size(); ++k) e[k] += o.e_[k];
  Monomial m;
  m.e_ = std::move(e);
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  std::vector<uint32_t> e = e_;
  for (size_t k = 0; k < o.e_.size(); ++k) e[k] -= o.e_[k];
  return Monomial(std::move(e));
}

Monomial Monomial::without(int v) const {
  std::vector<uint32_t> e = e_;
  if (v < int(e.size())) e[v] = 0;
  return Monomial(std::move(e));
}

bool operator<(const Monomial& a, const Monomial& b) {
  size_t n = std::max(a.e_.size(), b.e_.size());
  for (size_t k = 0; k < n; ++k) {
    uint32_t x = a.exp(int(k)), y = b.exp(int(k));
    if (x != y) return x < y;
  }
  return false;
}

// ---------------------------------------------------------------- polynomials

Poly::Poly(long c) {
  if (c != 0) t_.emplace(Monomial(), GaussRational(c));
}

Poly::Poly(const GaussRational& c) {
  if (!c.is_zero()) t_.emplace(Monomial(), c);
}

Poly::Poly(const Monomial& m, const GaussRational& c) {
  if (!c.is_zero()) t_.emplace(m, c);
}

Poly Poly::param(int idx) { return Poly(Monomial::var(idx), GaussRational(1)); }

GaussRational Poly::constant() const {
  if (t_.empty()) return GaussRational(0);
  if (!is_constant()) throw MalformedScalar("polynomial is not constant");
  return t_.begin()->second;
}

int Poly::max_var() const {
  int v = -1;
  for (auto& [m, c] : t_) v = std::max(v, m.size() - 1);
  return v;
}

uint32_t Poly::degree(int v) const {
  uint32_t d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m.exp(v));
  return d;
}

uint32_t Poly::total_degree() const {
  uint32_t d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m.total_degree());
  return d;
}

std::map<uint32_t, Poly> Poly::coeffs(int v) const {
  std::map<uint32_t, Poly> out;
  for (auto& [m, c] : t_) out[m.exp(v)].add_term(m.without(v), c);
  return out;
}

Poly Poly::coeff(int v, uint32_t d) const {
  Poly out;
  for (auto& [m, c] : t_)
    if (m.exp(v) == d) out.add_term(m.without(v), c);
  return out;
}

void Poly::add_term(const Monomial& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::scale(const GaussRational& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, x] : t_) x *= c;
  return *this;
}

int compare(const Poly& a, const Poly& b) {
  auto ia = a.t_.begin(), ib = b.t_.begin();
  for (; ia != a.t_.end() && ib != b.t_.end(); ++ia, ++ib) {
    if (ia->first < ib->first) return -1;
    if (ib->first < ia->first) return 1;
    int c = compare(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia == a.t_.end() && ib == b.t_.end()) return 0;
  return ia == a.t_.end() ? -1 : 1;
}

Poly Poly::conj() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = c.conj();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r.scale(leading_coeff().inverse());
  return r;
}

std::optional<GaussRational> Poly::eval(const std::vector<GaussRational>& point) const {
  GaussRational acc(0);
  for (auto& [m, c] : t_) {
    GaussRational term = c;
    for (int v = 0; v < m.size(); ++v) {
      if (m.exp(v) == 0) continue;
      if (v >= int(point.size())) return std::nullopt;
      for (uint32_t k = 0; k < m.exp(v); ++k) term *= point[v];
    }
    acc += term;
  }
  return acc;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool neg = c.is_real() && sgn(c.re) < 0;
    if (neg) cs = (-c).str();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool unit = (cs == "1");
    if (!unit || m.is_one()) os << cs;
    bool need_star = !unit;
    for (int v = 0; v < m.size(); ++v) {
      if (m.exp(v) == 0) continue;
      if (need_star) os << "*";
      os << ParamRegistry::display(v);
      if (m.exp(v) > 1) os << "^" << m.exp(v);
      need_star = true;
    }
  }
  return os.str();
}

Poly divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw MalformedScalar("division by zero polynomial");
  if (b.is_constant()) {
    Poly r = a;
    return r.scale(b.constant().inverse());
  }
  Poly q, r = a;
  const Monomial& lb = b.leading_monomial();
  GaussRational lcinv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) throw MalformedScalar("inexact polynomial division");
    Poly t(lr / lb, r.leading_coeff() * lcinv);
    q += t;
    r -= t * b;
  }
  return q;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  uint32_t db = b.degree(v);
  Poly lc = b.coeff(v, db);
  Poly r = a;
  while (!r.is_zero() && r.degree(v) >= db) {
    uint32_t dr = r.degree(v);
    Poly lr = r.coeff(v, dr);
    Poly shift(Monomial::var(v, dr - db), GaussRational(1));
    if (dr == db) shift = Poly(1);
    r = lc * r - lr * shift * b;
  }
  return r;
}

Poly content(const Poly& a, int v) {
  Poly g;
  for (auto& [d, c] : a.coeffs(v)) {
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  int v = std::max(a.max_var(), b.max_var());
  Poly ca = content(a, v), cb = content(b, v);
  Poly c = gcd(ca, cb);
  Poly pa = divexact(a, ca), pb = divexact(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree(v) == 0) {
      pa = Poly(1);
      break;
    }
    Poly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : divexact(r, content(r, v));
  }
  return (c * pa).monic();
}

// ---------------------------------------------------------------- scalars

Scalar::Scalar(Poly num) : num_(std::move(num)), den_(1) {}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Scalar Scalar::param(const std::string& name) { return Scalar(Poly::param(ParamRegistry::index(name))); }

Scalar normalize(const Poly& num, const Poly& den) { return Scalar(num, den); }

void Scalar::normalize() {
  if (den_.is_zero()) throw MalformedScalar("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  GaussRational lc = den_.leading_coeff();
  if (lc != GaussRational(1)) {
    GaussRational inv = lc.inverse();
    num_.scale(inv);
    den_.scale(inv);
  }
}

bool Scalar::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant() == GaussRational(1); }

GaussRational Scalar::constant() const {
  if (!is_constant()) throw MalformedScalar("scalar depends on parameters: " + str());
  return num_.constant() / den_.constant();
}

std::optional<Rational> Scalar::as_rational() const {
  if (!is_constant()) return std::nullopt;
  GaussRational g = constant();
  if (!g.is_real()) return std::nullopt;
  return g.re;
}

bool Scalar::is_real() const {
  for (auto& [m, c] : num_.terms())
    if (!c.is_real()) return false;
  for (auto& [m, c] : den_.terms())
    if (!c.is_real()) return false;
  return true;
}

Scalar Scalar::conj() const { return Scalar(num_.conj(), den_.conj()); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw MalformedScalar("inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  Scalar base = e < 0 ? inverse() : *this;
  Scalar r(1);
  for (int k = 0; k < std::abs(e); ++k) r *= base;
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw MalformedScalar("division by zero");
  if (o.is_constant()) {
    num_.scale(o.constant().inverse());
    return *this;
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

bool operator<(const Scalar& a, const Scalar& b) {
  int c = compare(a.num_, b.num_);
  if (c != 0) return c < 0;
  return compare(a.den_, b.den_) < 0;
}

std::optional<GaussRational> Scalar::eval(const std::vector<GaussRational>& point) const {
  auto n = num_.eval(point), d = den_.eval(point);
  if (!n || !d || d->is_zero()) return std::nullopt;
  return *n / *d;
}

int Scalar::max_var() const { return std::max(num_.max_var(), den_.max_var()); }

std::string Scalar::str() const {
  if (den_.is_constant()) return num_.str();
  std::string n = num_.str(), d = den_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace slagforge
