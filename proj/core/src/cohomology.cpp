#include "slagforge/cohomology.hpp"

#include "slagforge/lattice.hpp"
#include "slagforge/parallel.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace slagforge {

namespace {

using Op = std::function<WeightedForm(const WeightedForm&)>;

std::vector<Mask> masks_of_degree(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (degree(m) == k) out.push_back(m);
  return out;
}

struct Basis {
  std::vector<Mask> masks;
  std::map<Mask, size_t> index;
  explicit Basis(std::vector<Mask> ms) : masks(std::move(ms)) {
    for (size_t i = 0; i < masks.size(); ++i) index[masks[i]] = i;
  }
  size_t size() const { return masks.size(); }
};

// columns are op(χ·basis element), rows are coefficients on dst; complex bases go through φ, φ̄
Mat op_matrix(const Op& op, const Basis& src, const Basis& dst, const Character& ch, const ComplexFrame* cf) {
  Mat out = zeros(dst.size(), src.size());
  for (size_t c = 0; c < src.size(); ++c) {
    WeightedForm in = WeightedForm::mono(src.masks[c], Scalar(1), ch);
    if (cf) in = from_complex(in, *cf);
    WeightedForm img = op(in);
    if (cf) img = to_complex(img, *cf);
    for (auto& [k, x] : img.terms()) {
      if (k.first != ch) throw std::logic_error("differential mixed character blocks");
      auto it = dst.index.find(k.second);
      if (it == dst.index.end()) throw std::logic_error("operator left the target bidegree");
      out[it->second][c] = x;
    }
  }
  return out;
}

Vec column(const Mat& m, size_t c) {
  Vec v(m.size());
  for (size_t r = 0; r < m.size(); ++r) v[r] = m[r][c];
  return v;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(m.size());
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c)
      if (!m[r][c].is_zero() && !v[c].is_zero()) out[r] += m[r][c] * v[c];
  return out;
}

WeightedForm vec_to_form(const Vec& v, const Basis& b, const Character& ch, const ComplexFrame* cf) {
  WeightedForm f;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) f.add(ch, b.masks[i], v[i]);
  return cf ? from_complex(f, *cf) : f;
}

// kernel vectors independent modulo the image vectors
CohomologyGroup quotient(const std::vector<Vec>& kernel, const std::vector<Vec>& image, size_t n, const Basis& b,
                         const Character& ch, const ComplexFrame* cf) {
  SpanBasis span(n);
  for (auto& v : image) span.add(v);
  size_t base = span.size();
  CohomologyGroup g;
  for (auto& v : kernel)
    if (span.add(v)) g.representatives.push_back(vec_to_form(v, b, ch, cf));
  g.dim = span.size() - base;
  return g;
}

void merge(CohomologyGroup& into, CohomologyGroup&& g) {
  into.dim += g.dim;
  for (auto& r : g.representatives) into.representatives.push_back(std::move(r));
}

bool uses_fiber(const Character& ch, const ModelManifold& m, Mask fiber) {
  for (int w = 0; w < ch.size(); ++w)
    if (!ch.coeff(w).is_zero() && (fiber & (Mask(1) << m.direction_index.at(w)))) return true;
  return false;
}

std::string grading_name(std::pair<int, int> k, bool bigraded) {
  return bigraded ? "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")" : std::to_string(k.first);
}

Mask resolve_fiber(const ModelManifold& m, Mask fiber) {
  if (!fiber) fiber = m.polarization_fiber;
  if (!fiber) throw DomainError("model " + m.name + " declares no polarization");
  if (degree(fiber) * 2 != m.dim) throw DomainError("polarization fiber must have half the dimension");
  return fiber;
}

}  // namespace

size_t CohomologyTable::dim(int p, int q) const {
  auto it = groups.find({p, q});
  return it == groups.end() ? 0 : it->second.dim;
}

std::vector<size_t> CohomologyTable::betti() const {
  std::vector<size_t> b;
  for (auto& [k, g] : groups) {
    size_t deg = size_t(k.first + (bigraded ? k.second : 0));
    if (b.size() <= deg) b.resize(deg + 1);
    b[deg] += g.dim;
  }
  return b;
}

std::vector<size_t> CohomologyTable::row(int deg) const {
  std::vector<size_t> r;
  for (int p = deg; p >= 0; --p) r.push_back(dim(p, deg - p));
  return r;
}

std::string CohomologyTable::str(const ModelManifold& m) const {
  std::ostringstream os;
  os << kind << " cohomology of " << model << "\n";
  if (!bigraded) {
    os << "b_k:";
    for (auto b : betti()) os << " " << b;
    os << "\n";
  }
  int top = 0;
  for (auto& [k, g] : groups) top = std::max(top, k.first + (bigraded ? k.second : 0));
  for (int deg = 0; deg <= top; ++deg) {
    if (bigraded) {
      os << "degree " << deg << ":";
      for (auto d : row(deg)) os << " " << d;
      os << "\n";
    }
    for (auto& [k, g] : groups) {
      if (k.first + (bigraded ? k.second : 0) != deg || !g.dim) continue;
      os << "  " << grading_name(k, bigraded) << " dim " << g.dim << ":";
      for (size_t r = 0; r < g.representatives.size(); ++r)
        os << (r ? ", " : " ") << g.representatives[r].str(m.direction_names);
      os << "\n";
    }
  }
  return os.str();
}

std::vector<Character> weight_candidates(const ModelManifold& m) {
  std::set<Character> out{Character()};
  for (auto& w : m.weight_basis) {
    std::set<Character> next;
    for (auto& c : out)
      for (int k = -2; k <= 2; ++k) next.insert(c * w.pow(k));
    out = std::move(next);
  }
  return {out.begin(), out.end()};
}

std::vector<Character> admissible_characters(const ModelManifold& m) {
  std::vector<Character> out;
  for (auto& c : weight_candidates(m))
    if (character_trivial(c, m)) out.push_back(c);
  return out;
}

ModelManifold with_tau_mode(const ModelManifold& m, std::optional<Rational> q) {
  if (!m.lattice.present) throw DomainError("model " + m.name + " has no τ parameter");
  ModelManifold out = m;
  out.lattice.tau.set_active_q(std::move(q));
  return out;
}

CohomologyTable de_rham(const ModelManifold& m) {
  const Frame& fr = m.frame();
  int n = m.dim;
  std::vector<Basis> deg;
  for (int k = 0; k <= n; ++k) deg.emplace_back(masks_of_degree(n, k));
  auto chars = admissible_characters(m);
  Op dop = [&](const WeightedForm& f) { return d(f, fr); };

  std::vector<std::vector<CohomologyGroup>> blocks(chars.size(), std::vector<CohomologyGroup>(n + 1));
  parallel_for(chars.size(), [&](size_t c) {
    std::vector<Mat> D(n);
    for (int k = 0; k < n; ++k) D[k] = op_matrix(dop, deg[k], deg[k + 1], chars[c], nullptr);
    for (int k = 0; k <= n; ++k) {
      std::vector<Vec> kernel = k < n ? nullspace(D[k]) : std::vector<Vec>{};
      if (k == n) {
        for (size_t i = 0; i < deg[n].size(); ++i) {
          Vec e(deg[n].size());
          e[i] = Scalar(1);
          kernel.push_back(e);
        }
      }
      std::vector<Vec> image;
      if (k > 0)
        for (size_t j = 0; j < deg[k - 1].size(); ++j) image.push_back(column(D[k - 1], j));
      blocks[c][k] = quotient(kernel, image, deg[k].size(), deg[k], chars[c], nullptr);
    }
  });

  CohomologyTable t;
  t.kind = "de Rham";
  t.model = m.name;
  t.characters = chars;
  for (int k = 0; k <= n; ++k) t.groups[{k, 0}];
  for (auto& b : blocks)
    for (int k = 0; k <= n; ++k) merge(t.groups[{k, 0}], std::move(b[k]));
  return t;
}

int dolbeault_h10(const ModelManifold& m) {
  if (!m.is_complex() && m.h10_generators.empty())
    throw DomainError("h^{1,0} needs a complex structure on " + m.name);
  int count = 0;
  for (auto& g : m.h10_generators) {
    bool ok = true;
    for (auto& [k, c] : g.terms()) ok = ok && character_trivial(k.first, m);
    count += ok;
  }
  return count;
}

CohomologyTable refined_bott_chern(const ModelManifold& m, Mask fiber) {
  if (!m.is_complex()) throw DomainError("Bott-Chern cohomology needs a complex structure");
  // holomorphic bidegree; the polarization only restricts to base-dependent characters
  if (!fiber) fiber = m.polarization_fiber;
  const Frame& fr = m.frame();
  const ComplexFrame& cf = m.complex_frame();
  int n = cf.n();
  std::vector<Character> chars;
  for (auto& c : admissible_characters(m))
    if (!uses_fiber(c, m, fiber)) chars.push_back(c);

  std::map<std::pair<int, int>, Basis> bideg;
  std::vector<Basis> deg;
  for (int k = 0; k <= 2 * n; ++k) {
    deg.emplace_back(masks_of_degree(2 * n, k));
    for (int p = 0; p <= std::min(k, n); ++p) {
      int q = k - p;
      if (q > n) continue;
      std::vector<Mask> ms;
      for (Mask c : deg.back().masks)
        if (bidegree(c, n) == std::pair{p, q}) ms.push_back(c);
      bideg.emplace(std::pair{p, q}, Basis(ms));
    }
  }
  Op dop = [&](const WeightedForm& f) { return d(f, fr); };
  Op ddbar = [&](const WeightedForm& f) { return del(delbar(f, fr, cf), fr, cf); };

  std::vector<std::pair<int, int>> keys;
  for (auto& [k, b] : bideg) keys.push_back(k);
  std::vector<std::vector<CohomologyGroup>> blocks(chars.size(), std::vector<CohomologyGroup>(keys.size()));
  parallel_for(chars.size() * keys.size(), [&](size_t job) {
    size_t c = job / keys.size(), kk = job % keys.size();
    auto [p, q] = keys[kk];
    const Basis& V = bideg.at({p, q});
    int k = p + q;
    std::vector<Vec> kernel;
    if (k < 2 * n) {
      kernel = nullspace(op_matrix(dop, V, deg[k + 1], chars[c], &cf));
    } else {
      for (size_t i = 0; i < V.size(); ++i) {
        Vec e(V.size());
        e[i] = Scalar(1);
        kernel.push_back(e);
      }
    }
    std::vector<Vec> image;
    if (p > 0 && q > 0) {
      Mat I = op_matrix(ddbar, bideg.at({p - 1, q - 1}), V, chars[c], &cf);
      for (size_t j = 0; j < I[0].size(); ++j) image.push_back(column(I, j));
    }
    blocks[c][kk] = quotient(kernel, image, V.size(), V, chars[c], &cf);
  });

  CohomologyTable t;
  t.kind = "Bott-Chern";
  t.model = m.name;
  t.bigraded = true;
  t.characters = chars;
  for (auto& b : blocks)
    for (size_t kk = 0; kk < keys.size(); ++kk) merge(t.groups[keys[kk]], std::move(b[kk]));
  return t;
}

CohomologyTable refined_tseng_yau(const ModelManifold& m, Mask fiber) {
  fiber = resolve_fiber(m, fiber);
  Lefschetz lf(m.omega, m.dim);
  const Frame& fr = m.frame();
  int n = m.dim;
  Mask base = m.full() & ~fiber;

  std::vector<Character> chars;
  for (auto& c : admissible_characters(m))
    if (!uses_fiber(c, m, fiber)) chars.push_back(c);

  std::vector<Basis> deg;
  for (int k = 0; k <= n; ++k) deg.emplace_back(masks_of_degree(n, k));
  Op dop = [&](const WeightedForm& f) { return d(f, fr); };
  Op dl = [&](const WeightedForm& f) { return d_lambda(f, fr, lf); };
  Op ddl = [&](const WeightedForm& f) { return d(d_lambda(f, fr, lf), fr); };

  CohomologyTable t;
  t.kind = "Tseng-Yau";
  t.model = m.name;
  t.bigraded = true;
  t.characters = chars;
  int half = n / 2;

  for (auto& ch : chars) {
    for (int k = 0; k <= n; ++k) {
      Mat Dk = k < n ? op_matrix(dop, deg[k], deg[k + 1], ch, nullptr) : Mat{};
      Mat Lk = k > 0 ? op_matrix(dl, deg[k], deg[k - 1], ch, nullptr) : Mat{};
      Mat Ik = op_matrix(ddl, deg[k], deg[k], ch, nullptr);
      for (int p = std::max(0, k - half); p <= std::min(k, half); ++p) {
        std::vector<size_t> in_v, out_v;
        for (size_t i = 0; i < deg[k].size(); ++i)
          (degree(deg[k].masks[i] & base) == p ? in_v : out_v).push_back(i);
        std::vector<Mask> vm;
        for (size_t i : in_v) vm.push_back(deg[k].masks[i]);
        Basis V(vm);
        Mat stacked;
        if (!Dk.empty()) stacked = vstack(stacked, columns(Dk, in_v));
        if (!Lk.empty()) stacked = vstack(stacked, columns(Lk, in_v));
        std::vector<Vec> kernel;
        if (stacked.empty()) {
          for (size_t i = 0; i < V.size(); ++i) {
            Vec e(V.size());
            e[i] = Scalar(1);
            kernel.push_back(e);
          }
        } else {
          kernel = nullspace(stacked);
        }
        // im(dd^Λ) ∩ V: combinations whose image has no component outside V
        std::vector<Vec> image;
        Mat Iout = rows(Ik, out_v), Iin = rows(Ik, in_v);
        std::vector<Vec> combos;
        if (Iout.empty()) {
          for (size_t j = 0; j < deg[k].size(); ++j) {
            Vec e(deg[k].size());
            e[j] = Scalar(1);
            combos.push_back(e);
          }
        } else {
          combos = nullspace(Iout);
        }
        for (auto& c : combos) image.push_back(mat_vec(Iin, c));
        merge(t.groups[{p, k - p}], quotient(kernel, image, V.size(), V, ch, nullptr));
      }
    }
  }
  return t;
}

DiamondCheck mirror_diamond_check(const ModelManifold& x, const ModelManifold& x_check) {
  DiamondCheck r;
  r.tseng_yau = refined_tseng_yau(x);
  r.bott_chern = refined_bott_chern(x_check);
  int n = x.dim / 2;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      size_t a = r.tseng_yau.dim(p, q), b = r.bott_chern.dim(n - p, q);
      if (a != b)
        r.mismatches.push_back("h_TY(" + std::to_string(p) + "," + std::to_string(q) + ") = " + std::to_string(a) +
                               " but h_BC(" + std::to_string(n - p) + "," + std::to_string(q) + ") = " + std::to_string(b));
    }
  r.pass = r.mismatches.empty();
  return r;
}

bool rank_nullity_holds(const ModelManifold& m) {
  const Frame& fr = m.frame();
  int n = m.dim;
  Op dop = [&](const WeightedForm& f) { return d(f, fr); };
  for (auto& ch : admissible_characters(m))
    for (int k = 0; k < n; ++k) {
      Basis src(masks_of_degree(n, k)), dst(masks_of_degree(n, k + 1));
      Mat D = op_matrix(dop, src, dst, ch, nullptr);
      if (rank(D) + nullspace(D).size() != src.size()) return false;
    }
  return true;
}

}  // namespace slagforge
