#include "slagforge/property.hpp"

#include "slagforge/cohomology.hpp"
#include "slagforge/mirror.hpp"

#include <random>

namespace slagforge {

namespace {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Scalar rational() {
    int num = uniform(-9, 9), den = uniform(1, 6);
    return Scalar::rational(num, den);
  }

  // elements of Q(i)(λ, τ), occasionally non-polynomial
  Scalar scalar() {
    Scalar s = rational();
    if (coin(0.4)) s += rational() * Scalar::i();
    if (coin(0.4)) s += rational() * Scalar::param("lambda");
    if (coin(0.2)) s *= Scalar::param("tau") + Scalar(uniform(1, 3));
    if (coin(0.2)) s /= Scalar::param("lambda") + Scalar(uniform(1, 4));
    return s;
  }

  Scalar nonzero_scalar() {
    Scalar s;
    while (s.is_zero()) s = scalar();
    return s;
  }

  Mask mask(int dim, int deg) {
    std::vector<int> idx(dim);
    for (int k = 0; k < dim; ++k) idx[k] = k;
    std::shuffle(idx.begin(), idx.end(), rng_);
    Mask m = 0;
    for (int k = 0; k < deg; ++k) m |= Mask(1) << idx[k];
    return m;
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[size_t(uniform(0, int(v.size()) - 1))];
  }

  WeightedForm form(int dim, int deg, const std::vector<Character>& chars, int terms = 3) {
    WeightedForm f;
    for (int t = 0; t < terms; ++t) f.add(pick(chars), mask(dim, deg), scalar());
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

struct Pool {
  std::vector<ModelManifold> models, complex_models;
  std::vector<std::vector<Character>> chars, complex_chars;

  Pool() {
    for (auto& n : builtin_names()) {
      ModelManifold m = builtin(n);
      auto c = weight_candidates(m);
      if (m.is_complex()) {
        complex_models.push_back(m);
        complex_chars.push_back(c);
      }
      models.push_back(std::move(m));
      chars.push_back(std::move(c));
    }
  }
};

const Pool& pool() {
  static const Pool p;
  return p;
}

template <class Body>
PropertyResult run(const std::string& name, size_t n, uint64_t seed, Body body) {
  PropertyResult r;
  r.name = name;
  Gen g(seed);
  for (size_t k = 0; k < n; ++k) {
    ++r.instances;
    std::string why;
    if (!body(g, why)) {
      if (!r.failures) r.first_failure = why;
      ++r.failures;
    }
  }
  return r;
}

Vec bracket(const std::map<std::pair<int, int>, Vec>& br, const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (auto& [ij, v] : br) {
    Scalar c = x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first];
    if (c.is_zero()) continue;
    for (size_t t = 0; t < v.size(); ++t) out[t] += c * v[t];
  }
  return out;
}

}  // namespace

PropertyResult check_d_squared(size_t n, uint64_t seed) {
  return run("d^2 = 0", n, seed, [](Gen& g, std::string& why) {
    size_t m = size_t(g.uniform(0, int(pool().models.size()) - 1));
    const auto& model = pool().models[m];
    WeightedForm f = g.form(model.dim, g.uniform(0, model.dim - 2), pool().chars[m]);
    WeightedForm dd = d(d(f, model.frame()), model.frame());
    if (!dd.is_zero()) why = model.name + ": d²(" + f.str(model.direction_names) + ") ≠ 0";
    return dd.is_zero();
  });
}

PropertyResult check_jacobi(size_t n, uint64_t seed) {
  return run("Jacobi identity", n, seed, [](Gen& g, std::string& why) {
    const auto& model = g.pick(pool().models);
    auto br = brackets(model);
    auto vec = [&] {
      Vec v(model.dim);
      for (auto& x : v)
        if (g.coin(0.6)) x = g.scalar();
      return v;
    };
    Vec x = vec(), y = vec(), z = vec();
    Vec a = bracket(br, x, bracket(br, y, z)), b = bracket(br, y, bracket(br, z, x)), c = bracket(br, z, bracket(br, x, y));
    for (int t = 0; t < model.dim; ++t)
      if (!(a[t] + b[t] + c[t]).is_zero()) {
        why = model.name + ": Jacobi sum has nonzero E" + std::to_string(t + 1) + " component";
        return false;
      }
    return true;
  });
}

PropertyResult check_leibniz(size_t n, uint64_t seed) {
  return run("Leibniz rule", n, seed, [](Gen& g, std::string& why) {
    size_t m = size_t(g.uniform(0, int(pool().models.size()) - 1));
    const auto& model = pool().models[m];
    const Frame& fr = model.frame();
    int p = g.uniform(0, 3), q = g.uniform(0, 2);
    WeightedForm a = g.form(model.dim, p, pool().chars[m], 2), b = g.form(model.dim, q, pool().chars[m], 2);
    WeightedForm lhs = d(wedge(a, b), fr);
    WeightedForm rhs = wedge(d(a, fr), b) + Scalar(p % 2 ? -1 : 1) * wedge(a, d(b, fr));
    if (lhs != rhs) why = model.name + ": d(a∧b) ≠ da∧b ± a∧db for a = " + a.str(model.direction_names);
    return lhs == rhs;
  });
}

PropertyResult check_star_star(size_t n, uint64_t seed) {
  return run("star-star sign law", n, seed, [](Gen& g, std::string& why) {
    int dim = g.uniform(1, 9);
    Mask support = g.mask(9, dim);
    int k = g.uniform(0, dim);
    std::vector<int> legs = indices(support);
    WeightedForm f;
    for (int t = 0; t < 3; ++t) {
      Mask m = 0;
      Mask pick = g.mask(dim, k);
      for (int b : indices(pick)) m |= Mask(1) << legs[b];
      f.add(Character(), m, g.scalar());
    }
    WeightedForm ss = hodge_star(hodge_star(f, support), support);
    WeightedForm want = Scalar((k * (dim - k)) % 2 ? -1 : 1) * f;
    if (ss != want) why = "⋆⋆ on a " + std::to_string(k) + "-form in dimension " + std::to_string(dim);
    return ss == want;
  });
}

PropertyResult check_del_delbar(size_t n, uint64_t seed) {
  return run("del/delbar anticommutation", n, seed, [](Gen& g, std::string& why) {
    size_t m = size_t(g.uniform(0, int(pool().complex_models.size()) - 1));
    const auto& model = pool().complex_models[m];
    const Frame& fr = model.frame();
    const ComplexFrame& cf = model.complex_frame();
    WeightedForm f = g.form(model.dim, g.uniform(0, 4), pool().complex_chars[m], 2);
    WeightedForm a = del(delbar(f, fr, cf), fr, cf), b = delbar(del(f, fr, cf), fr, cf);
    bool ok = (a + b).is_zero() && del(del(f, fr, cf), fr, cf).is_zero() && delbar(delbar(f, fr, cf), fr, cf).is_zero() &&
              del(f, fr, cf) + delbar(f, fr, cf) == d(f, fr);
    if (!ok) why = model.name + ": ∂∂̄ + ∂̄∂ ≠ 0 or d ≠ ∂ + ∂̄ on " + f.str(model.direction_names);
    return ok;
  });
}

PropertyResult check_fm_linearity(size_t n, uint64_t seed) {
  return run("Fourier-Mukai linearity", n, seed, [](Gen& g, std::string& why) {
    std::vector<Character> chars{Character(), Character::along(0, Scalar::param("lambda")),
                                 Character::along(0, Scalar(-2) * Scalar::param("lambda")), Character::along(0, Scalar(1))};
    auto form = [&] {
      WeightedForm f;
      for (int deg = 0; deg <= 6; ++deg)
        if (g.coin(0.5)) f += g.form(kFlatDim, deg, chars, 2);
      return f;
    };
    WeightedForm f = form(), h = form();
    Scalar a = g.scalar(), b = g.scalar(), vol = g.nonzero_scalar();
    WeightedForm lhs = fourier_mukai(a * f + b * h, vol);
    WeightedForm rhs = a * fourier_mukai(f, vol) + b * fourier_mukai(h, vol);
    if (lhs != rhs) why = "FT(af + bg) ≠ aFT(f) + bFT(g)";
    return lhs == rhs;
  });
}

PropertyResult check_field_axioms(size_t n, uint64_t seed) {
  return run("field axioms", n, seed, [](Gen& g, std::string& why) {
    Scalar a = g.scalar(), b = g.scalar(), c = g.scalar();
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
              a * (b + c) == a * b + a * c && a + Scalar(0) == a && a * Scalar(1) == a && (a - a).is_zero() &&
              (a.is_zero() || (a * a.inverse()).is_one()) && a.conj().conj() == a && (a * b).conj() == a.conj() * b.conj();
    if (!ok) why = "axiom failure for a = " + a.str() + ", b = " + b.str() + ", c = " + c.str();
    return ok;
  });
}

std::vector<PropertyResult> run_properties(size_t n, uint64_t seed) {
  return {check_d_squared(n, seed),      check_jacobi(n, seed + 1),       check_leibniz(n, seed + 2),
          check_star_star(n, seed + 3),  check_del_delbar(n, seed + 4),   check_fm_linearity(n, seed + 5),
          check_field_axioms(n, seed + 6)};
}

}  // namespace slagforge
