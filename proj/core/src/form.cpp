#include "slagforge/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slagforge {

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  Mask bb = b;
  while (bb) {
    int k = __builtin_ctz(bb);
    bb &= bb - 1;
    Mask above = a & ~((Mask(2) << k) - 1);
    swaps += __builtin_popcount(above);
  }
  return (swaps & 1) ? -1 : 1;
}

std::vector<int> indices(Mask m) {
  std::vector<int> r;
  while (m) {
    r.push_back(__builtin_ctz(m));
    m &= m - 1;
  }
  return r;
}

Mask mask_of(const std::vector<int>& one_based) {
  Mask m = 0;
  for (int k : one_based) {
    if (k < 1 || k > 32) throw std::out_of_range("coframe index out of range");
    m |= Mask(1) << (k - 1);
  }
  return m;
}

// ---------------------------------------------------------------- characters

Character::Character(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

Character Character::along(int direction, const Scalar& c) {
  std::vector<Scalar> v(direction + 1, Scalar(0));
  v[direction] = c;
  return Character(std::move(v));
}

void Character::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Character::coeff(int w) const {
  static const Scalar zero(0);
  return w < int(c_.size()) ? c_[w] : zero;
}

Character Character::operator*(const Character& o) const {
  if (o.trivial()) return *this;
  if (trivial()) return o;
  std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
  return Character(std::move(v));
}

Character Character::inverse() const {
  std::vector<Scalar> v;
  for (auto& x : c_) v.push_back(-x);
  return Character(std::move(v));
}

Character Character::conj() const {
  std::vector<Scalar> v;
  for (auto& x : c_) v.push_back(x.conj());
  return Character(std::move(v));
}

Character Character::pow(int k) const {
  std::vector<Scalar> v;
  for (auto& x : c_) v.push_back(x * Scalar(k));
  return Character(std::move(v));
}

bool operator<(const Character& a, const Character& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t k = 0; k < a.c_.size(); ++k) {
    if (a.c_[k] < b.c_[k]) return true;
    if (b.c_[k] < a.c_[k]) return false;
  }
  return false;
}

std::string Character::str(const std::vector<std::string>& names) const {
  if (trivial()) return "";
  std::string s;
  for (size_t w = 0; w < c_.size(); ++w) {
    if (c_[w].is_zero()) continue;
    std::string name = w < names.size() ? names[w] : "x" + std::to_string(w);
    std::string cs = c_[w].str();
    std::string term;
    if (cs == "1")
      term = name;
    else if (cs == "-1")
      term = "-" + name;
    else if (c_[w].num().terms().size() > 1)
      term = "(" + cs + ")" + name;
    else
      term = cs + name;
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return "e^{" + s + "}";
}

// ---------------------------------------------------------------- forms

WeightedForm::WeightedForm(const Scalar& s) {
  if (!s.is_zero()) t_.emplace(Key{Character(), 0}, s);
}

WeightedForm WeightedForm::mono(Mask m, const Scalar& c, const Character& ch) {
  WeightedForm f;
  f.add(ch, m, c);
  return f;
}

WeightedForm WeightedForm::theta(int one_based) { return mono(Mask(1) << (one_based - 1)); }

void WeightedForm::add(const Character& ch, Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  Key k{ch, m};
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(std::move(k), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Scalar WeightedForm::coeff(Mask m, const Character& ch) const {
  auto it = t_.find(Key{ch, m});
  return it == t_.end() ? Scalar(0) : it->second;
}

int WeightedForm::degree() const {
  int deg = -1;
  for (auto& [k, c] : t_) {
    int dk = slagforge::degree(k.second);
    if (deg == -1)
      deg = dk;
    else if (deg != dk)
      return -1;
  }
  return deg;
}

bool WeightedForm::invariant() const {
  for (auto& [k, c] : t_)
    if (!k.first.trivial()) return false;
  return true;
}

WeightedForm WeightedForm::operator-() const {
  WeightedForm r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

WeightedForm& WeightedForm::operator+=(const WeightedForm& o) {
  for (auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}

WeightedForm& WeightedForm::operator-=(const WeightedForm& o) {
  for (auto& [k, c] : o.t_) add(k.first, k.second, -c);
  return *this;
}

WeightedForm& WeightedForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, c] : t_) c *= s;
  return *this;
}

WeightedForm WeightedForm::conj() const {
  WeightedForm r;
  for (auto& [k, c] : t_) r.add(k.first.conj(), k.second, c.conj());
  return r;
}

WeightedForm WeightedForm::re() const { return (*this + conj()) * Scalar::rational(1, 2); }

WeightedForm WeightedForm::im() const { return (*this - conj()) * (Scalar::i().inverse() * Scalar::rational(1, 2)); }

WeightedForm WeightedForm::times(const Character& ch) const {
  WeightedForm r;
  for (auto& [k, c] : t_) r.add(k.first * ch, k.second, c);
  return r;
}

WeightedForm WeightedForm::part(int deg) const {
  WeightedForm r;
  for (auto& [k, c] : t_)
    if (slagforge::degree(k.second) == deg) r.t_.emplace(k, c);
  return r;
}

WeightedForm WeightedForm::restrict_to(Mask keep) const {
  WeightedForm r;
  for (auto& [k, c] : t_)
    if ((k.second & ~keep) == 0) r.t_.emplace(k, c);
  return r;
}

WeightedForm WeightedForm::map_scalars(Scalar (*f)(const Scalar&)) const {
  WeightedForm r;
  for (auto& [k, c] : t_) r.add(k.first, k.second, f(c));
  return r;
}

std::string WeightedForm::str(const std::vector<std::string>& dir_names, const char* gen) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : t_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && c.num().terms().size() == 1;
    if (neg) cs = (-c).str();
    if (!first)
      os << (neg ? " - " : " + ");
    else if (neg)
      os << "-";
    first = false;
    bool compound = c.num().terms().size() > 1 && c.den().is_constant();
    bool unit = (cs == "1");
    if (!unit) os << (compound ? "(" + cs + ")" : cs);
    std::string ch = k.first.str(dir_names);
    if (!ch.empty()) os << (unit ? "" : "·") << ch;
    if (k.second) {
      if (!unit || !ch.empty()) os << "·";
      os << gen << "^{";
      for (int i : indices(k.second)) os << (i + 1 >= 10 ? "," : "") << i + 1;
      os << "}";
    } else if (unit && ch.empty()) {
      os << "1";
    }
  }
  return os.str();
}

WeightedForm wedge(const WeightedForm& a, const WeightedForm& b) {
  WeightedForm r;
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, cb] : b.terms()) {
      int s = wedge_sign(ka.second, kb.second);
      if (!s) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      r.add(ka.first * kb.first, ka.second | kb.second, c);
    }
  return r;
}

WeightedForm power(const WeightedForm& a, int k) {
  WeightedForm r(Scalar(1));
  for (int j = 0; j < k; ++j) r = wedge(r, a);
  return r;
}

WeightedForm exp_form(const WeightedForm& a) {
  WeightedForm sum(Scalar(1)), term(Scalar(1));
  for (int k = 1; k < 64; ++k) {
    term = wedge(term, a) * Scalar::rational(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------- frames

Frame::Frame(int dim, std::vector<std::vector<std::pair<Mask, Scalar>>> dtheta,
             std::vector<std::string> dir_names, std::vector<int> dir_index)
    : dim_(dim), dtheta_(std::move(dtheta)), dir_names_(std::move(dir_names)), dir_index_(std::move(dir_index)) {
  if (int(dtheta_.size()) != dim_) throw std::invalid_argument("frame needs one differential per coframe element");
  if (dir_names_.size() != dir_index_.size()) throw std::invalid_argument("direction names and indices differ in length");
  // d θ^I by the Leibniz rule, cached for every monomial
  dmono_.assign(size_t(1) << dim_, {});
  for (Mask m = 1; m < (Mask(1) << dim_); ++m) {
    std::map<Mask, Scalar> acc;
    int pos = 0;
    for (int i : indices(m)) {
      Mask below = m & ((Mask(1) << i) - 1);
      Mask above = m & ~((Mask(2) << i) - 1);
      for (auto& [two, c] : dtheta_[i]) {
        int s1 = wedge_sign(below, two);
        if (!s1) continue;
        int s2 = wedge_sign(below | two, above);
        if (!s2) continue;
        int s = s1 * s2 * ((pos & 1) ? -1 : 1);
        auto& slot = acc[below | two | above];
        slot += s > 0 ? c : -c;
      }
      ++pos;
    }
    for (auto& [mm, c] : acc)
      if (!c.is_zero()) dmono_[m].emplace_back(mm, c);
  }
}

Frame Frame::flat(int dim, std::vector<std::string> dir_names, std::vector<int> dir_index) {
  return Frame(dim, std::vector<std::vector<std::pair<Mask, Scalar>>>(dim), std::move(dir_names), std::move(dir_index));
}

int Frame::direction(const std::string& name) const {
  for (size_t k = 0; k < dir_names_.size(); ++k)
    if (dir_names_[k] == name) return int(k);
  return -1;
}

// ---------------------------------------------------------------- d, ι, ⋆

WeightedForm d(const WeightedForm& f, const Frame& fr) {
  WeightedForm r;
  for (auto& [k, c] : f.terms()) {
    const Character& ch = k.first;
    Mask m = k.second;
    if (ch.size() > fr.directions()) throw std::invalid_argument("character uses an unknown weight direction");
    for (int w = 0; w < ch.size(); ++w) {
      if (ch.coeff(w).is_zero()) continue;
      Mask e = Mask(1) << fr.direction_index(w);
      int s = wedge_sign(e, m);
      if (!s) continue;
      Scalar cc = c * ch.coeff(w);
      r.add(ch, e | m, s > 0 ? cc : -cc);
    }
    if (m >= (Mask(1) << fr.dim())) throw std::invalid_argument("unknown coframe index");
    for (auto& [mm, cm] : fr.dmono(m)) r.add(ch, mm, c * cm);
  }
  return r;
}

WeightedForm interior(int e, const WeightedForm& f) {
  WeightedForm r;
  Mask bit = Mask(1) << e;
  for (auto& [k, c] : f.terms()) {
    if (!(k.second & bit)) continue;
    int pos = __builtin_popcount(k.second & (bit - 1));
    r.add(k.first, k.second & ~bit, (pos & 1) ? -c : c);
  }
  return r;
}

WeightedForm interior(const Vec& v, const WeightedForm& f) {
  WeightedForm r;
  for (size_t e = 0; e < v.size(); ++e)
    if (!v[e].is_zero()) r += interior(int(e), f) * v[e];
  return r;
}

Scalar evaluate(const WeightedForm& f, const std::vector<Vec>& vectors) {
  if (f.is_zero()) return Scalar(0);
  int deg = f.degree();
  if (deg < 0 || deg != int(vectors.size())) throw std::invalid_argument("degree mismatch in evaluation");
  if (!f.invariant()) throw std::invalid_argument("evaluation of a weighted form needs a point");
  WeightedForm g = f;
  for (auto& v : vectors) g = interior(v, g);
  return g.coeff(0);
}

WeightedForm hodge_star(const WeightedForm& f, Mask support) {
  WeightedForm r;
  for (auto& [k, c] : f.terms()) {
    if (k.second & ~support) throw std::invalid_argument("hodge star outside its support");
    Mask rest = support & ~k.second;
    int s = wedge_sign(k.second, rest);
    r.add(k.first, rest, s > 0 ? c : -c);
  }
  return r;
}

// ---------------------------------------------------------------- complex basis

namespace {
using Images = std::vector<std::vector<std::pair<Mask, Scalar>>>;

// image of every monomial given images of the generators
Images expand(int ngen, const std::vector<std::vector<std::pair<Mask, Scalar>>>& gens) {
  Images out(size_t(1) << ngen);
  out[0] = {{0, Scalar(1)}};
  for (Mask m = 1; m < (Mask(1) << ngen); ++m) {
    int top = 31 - __builtin_clz(m);
    const auto& head = out[m & ~(Mask(1) << top)];
    std::map<Mask, Scalar> acc;
    for (auto& [hm, hc] : head)
      for (auto& [gm, gc] : gens[top]) {
        int s = wedge_sign(hm, gm);
        if (!s) continue;
        auto& slot = acc[hm | gm];
        slot += s > 0 ? hc * gc : -(hc * gc);
      }
    for (auto& [mm, c] : acc)
      if (!c.is_zero()) out[m].emplace_back(mm, c);
  }
  return out;
}
}  // namespace

ComplexFrame::ComplexFrame(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  int n = int(pairs_.size()), dim = 2 * n;
  Scalar half = Scalar::rational(1, 2), ihalf = Scalar::i() * half;
  std::vector<std::vector<std::pair<Mask, Scalar>>> real_gen(dim), cplx_gen(dim);
  for (int k = 0; k < n; ++k) {
    auto [a, b] = pairs_[k];
    Mask phi = Mask(1) << k, phibar = Mask(1) << (n + k);
    // θ^a = (φ + φ̄)/2, θ^b = (φ − φ̄)/(2i)
    real_gen[a] = {{phi, half}, {phibar, half}};
    real_gen[b] = {{phi, -ihalf}, {phibar, ihalf}};
    cplx_gen[k] = {{Mask(1) << a, Scalar(1)}, {Mask(1) << b, Scalar::i()}};
    cplx_gen[n + k] = {{Mask(1) << a, Scalar(1)}, {Mask(1) << b, -Scalar::i()}};
  }
  r2c_ = expand(dim, real_gen);
  c2r_ = expand(dim, cplx_gen);
}

WeightedForm to_complex(const WeightedForm& f, const ComplexFrame& cf) {
  WeightedForm r;
  for (auto& [k, c] : f.terms())
    for (auto& [m, cm] : cf.real_to_complex(k.second)) r.add(k.first, m, c * cm);
  return r;
}

WeightedForm from_complex(const WeightedForm& f, const ComplexFrame& cf) {
  WeightedForm r;
  for (auto& [k, c] : f.terms())
    for (auto& [m, cm] : cf.complex_to_real(k.second)) r.add(k.first, m, c * cm);
  return r;
}

std::pair<int, int> bidegree(Mask m, int n) {
  Mask low = (Mask(1) << n) - 1;
  return {__builtin_popcount(m & low), __builtin_popcount(m >> n)};
}

std::map<std::pair<int, int>, WeightedForm> bidegree_split(const WeightedForm& f, const ComplexFrame& cf) {
  std::map<std::pair<int, int>, WeightedForm> parts;
  WeightedForm c = to_complex(f, cf);
  for (auto& [k, x] : c.terms()) parts[bidegree(k.second, cf.n())].add(k.first, k.second, x);
  for (auto& [pq, g] : parts) g = from_complex(g, cf);
  return parts;
}

WeightedForm project(const WeightedForm& f, const ComplexFrame& cf, int p, int q) {
  WeightedForm c = to_complex(f, cf), out;
  for (auto& [k, x] : c.terms())
    if (bidegree(k.second, cf.n()) == std::pair{p, q}) out.add(k.first, k.second, x);
  return from_complex(out, cf);
}

WeightedForm del(const WeightedForm& f, const Frame& fr, const ComplexFrame& cf) {
  WeightedForm r;
  for (auto& [pq, g] : bidegree_split(f, cf)) r += project(d(g, fr), cf, pq.first + 1, pq.second);
  return r;
}

WeightedForm delbar(const WeightedForm& f, const Frame& fr, const ComplexFrame& cf) {
  WeightedForm r;
  for (auto& [pq, g] : bidegree_split(f, cf)) r += project(d(g, fr), cf, pq.first, pq.second + 1);
  return r;
}

// ---------------------------------------------------------------- Lefschetz

Lefschetz::Lefschetz(const WeightedForm& omega, int dim) : omega_(omega), dim_(dim) {
  if (!omega.invariant() || omega.degree() != 2) throw DegenerateForm("symplectic form must be an invariant 2-form");
  Mat w = zeros(dim, dim);
  for (auto& [k, c] : omega.terms()) {
    auto ij = indices(k.second);
    w[ij[0]][ij[1]] = c;
    w[ij[1]][ij[0]] = -c;
  }
  // invert by Gauss-Jordan on [W | I]
  Mat aug = zeros(dim, 2 * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) aug[i][j] = w[i][j];
    aug[i][dim + i] = Scalar(1);
  }
  for (int c = 0; c < dim; ++c) {
    int p = c;
    while (p < dim && aug[p][c].is_zero()) ++p;
    if (p == dim) throw DegenerateForm("degenerate symplectic form");
    std::swap(aug[p], aug[c]);
    Scalar inv = aug[c][c].inverse();
    for (auto& x : aug[c]) x *= inv;
    for (int i = 0; i < dim; ++i) {
      if (i == c || aug[i][c].is_zero()) continue;
      Scalar f = aug[i][c];
      for (int j = 0; j < 2 * dim; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  pi_ = zeros(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) pi_[i][j] = -aug[i][dim + j];
}

WeightedForm Lefschetz::lambda(const WeightedForm& f) const {
  WeightedForm r;
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b) {
      if (pi_[a][b].is_zero()) continue;
      r += interior(b, interior(a, f)) * pi_[a][b];
    }
  return r;
}

WeightedForm d_lambda(const WeightedForm& f, const Frame& fr, const Lefschetz& lf) {
  return d(lf.lambda(f), fr) - lf.lambda(d(f, fr));
}

}  // namespace slagforge
