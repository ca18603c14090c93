#include "slagforge/model.hpp"

#include <algorithm>
#include <sstream>

namespace slagforge {

namespace {

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string rest_after(const std::string& line, size_t ntok) {
  size_t pos = 0;
  for (size_t k = 0; k < ntok; ++k) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }
  std::string r = line.substr(pos);
  size_t a = r.find_first_not_of(" \t");
  return a == std::string::npos ? "" : r.substr(a);
}

int to_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got \"" + s + "\"");
  }
}

std::optional<Rational> parse_q(const std::string& s) {
  if (s == "generic") return std::nullopt;
  auto v = parse_scalar(s).as_rational();
  if (!v) throw ParseError("q must be rational or 'generic', got \"" + s + "\"");
  return *v;
}

}  // namespace

std::string TauMode::describe() const {
  auto q = active_q();
  std::string per = inverted ? "τ⁻¹" : "τ";
  if (!q) return per + "·" + unit.str() + " generic (not a rational multiple of 2π)";
  return per + "·" + unit.str() + " = 2π·" + q->get_str();
}

FormContext ModelManifold::context() const {
  FormContext c;
  c.dim = dim;
  c.directions = direction_names;
  c.complex_pairs = jpairs;
  return c;
}

Scalar ModelManifold::f(int i, int j, int k) const {
  if (j == k) return Scalar(0);
  bool swap = j > k;
  auto it = structure.find({i, std::min(j, k), std::max(j, k)});
  if (it == structure.end()) return Scalar(0);
  return swap ? -it->second : it->second;
}

const Foliation* ModelManifold::foliation(const std::string& id) const {
  for (auto& f : foliations)
    if (f.id == id) return &f;
  return nullptr;
}

void ModelManifold::finalize() {
  if (dim < 2 || dim % 2 || dim > 16) throw ModelError("model dimension must be even and at most 16");
  std::vector<std::vector<std::pair<Mask, Scalar>>> dt(dim);
  for (auto& [key, c] : structure) {
    if (c.is_zero()) continue;
    auto [i, j, k] = key;
    if (i < 0 || i >= dim || j < 0 || k >= dim || j >= k) throw ModelError("structure constant index out of range");
    dt[i].emplace_back((Mask(1) << j) | (Mask(1) << k), c);
  }
  for (size_t w = 0; w < direction_index.size(); ++w) {
    int e = direction_index[w];
    if (e < 0 || e >= dim) throw ModelError("weight direction index out of range");
    if (!dt[e].empty())
      throw ModelError("weight direction " + direction_names[w] + " is not a closed coframe element");
  }
  frame_ = Frame(dim, dt, direction_names, direction_index);
  if (!jpairs.empty()) {
    if (int(jpairs.size()) * 2 != dim) throw ModelError("J must pair every coframe index");
    cframe_ = ComplexFrame(jpairs);
  }
}

ModelManifold ModelManifold::from_text(const std::string& text) {
  ModelManifold m;
  m.source = text;
  std::vector<std::pair<int, std::string>> deferred;  // forms need directions and J first
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto err = [&](const std::string& what) { return ParseError("model line " + std::to_string(lineno) + ": " + what); };
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto tok = split(line);
    if (tok.empty()) continue;
    const std::string& cmd = tok[0];
    try {
      if (cmd == "name") {
        if (tok.size() != 2) throw err("name takes one word");
        m.name = tok[1];
      } else if (cmd == "kind") {
        m.kind = 0;
        for (auto& part : tok)
          if (&part != &tok[0]) {
            std::string p = part;
            size_t bar;
            while (!p.empty()) {
              bar = p.find('|');
              std::string w = p.substr(0, bar);
              if (w == "complex")
                m.kind |= kComplex;
              else if (w == "symplectic")
                m.kind |= kSymplectic;
              else
                throw err("unknown kind " + w);
              p = bar == std::string::npos ? "" : p.substr(bar + 1);
            }
          }
        if (!m.kind) throw err("kind is empty");
      } else if (cmd == "dim") {
        if (tok.size() != 2) throw err("dim takes one integer");
        m.dim = to_int(tok[1], "dim");
      } else if (cmd == "params") {
        for (size_t k = 1; k < tok.size(); ++k) {
          m.params.push_back(tok[k]);
          ParamRegistry::index(tok[k]);
        }
      } else if (cmd == "f") {
        if (tok.size() < 6 || tok[4] != "=") throw err("expected: f <i> <j> <k> = <expr>");
        int i = to_int(tok[1], "f") - 1, j = to_int(tok[2], "f") - 1, k = to_int(tok[3], "f") - 1;
        if (j == k) throw err("f needs distinct lower indices");
        Scalar v = parse_scalar(rest_after(line, 5));
        if (j > k) {
          std::swap(j, k);
          v = -v;
        }
        m.structure[{i, j, k}] += v;
      } else if (cmd == "J") {
        if (m.dim == 0) throw err("dim must precede J");
        m.jmap.assign(m.dim, -1);
        m.jsign.assign(m.dim, 0);
        m.jpairs.clear();
        for (size_t k = 1; k < tok.size(); ++k) {
          auto gt = tok[k].find('>');
          if (gt == std::string::npos) throw err("J entries look like a>b");
          int a = to_int(tok[k].substr(0, gt), "J") - 1, b = to_int(tok[k].substr(gt + 1), "J") - 1;
          if (a < 0 || b < 0 || a >= m.dim || b >= m.dim || a == b) throw err("J index out of range");
          if (m.jmap[a] != -1 || m.jmap[b] != -1) throw err("J index used twice");
          m.jmap[a] = b;
          m.jsign[a] = 1;
          m.jmap[b] = a;
          m.jsign[b] = -1;
          m.jpairs.emplace_back(a, b);
        }
      } else if (cmd == "direction") {
        if (tok.size() != 3) throw err("expected: direction <name> <index>");
        m.direction_names.push_back(tok[1]);
        m.direction_index.push_back(to_int(tok[2], "direction") - 1);
      } else if (cmd == "omega" || cmd == "Omega" || cmd == "weights" || cmd == "h10" || cmd == "flat_omega" ||
                 cmd == "flat_dict") {
        deferred.emplace_back(lineno, line);
      } else if (cmd == "lattice") {
        if (tok.size() != 6 || tok[1] != "M") throw err("expected: lattice M a b c d");
        m.lattice.present = true;
        for (int k = 0; k < 4; ++k) m.lattice.M[k / 2][k % 2] = to_int(tok[2 + k], "lattice");
      } else if (cmd == "tau") {
        for (size_t k = 1; k < tok.size(); ++k) {
          const std::string& t = tok[k];
          auto eq = t.find('=');
          std::string key = t.substr(0, eq), val = eq == std::string::npos ? "" : t.substr(eq + 1);
          if (key == "unit")
            m.lattice.tau.unit = parse_scalar(val);
          else if (key == "q_tau")
            m.lattice.tau.q_tau = parse_q(val);
          else if (key == "q_inv")
            m.lattice.tau.q_inv = parse_q(val);
          else if (key == "inverted")
            m.lattice.tau.inverted = true;
          else
            throw err("unknown tau field " + key);
        }
      } else if (cmd == "shift" || cmd == "period") {
        if (tok.size() != 2) throw err(cmd + " takes a direction name");
        (cmd == "shift" ? m.lattice.shift_direction : m.lattice.period_direction) = tok[1];
      } else if (cmd == "coord") {
        CoordAction c;
        if (tok.size() == 4 && tok[2] == "shift") {
          c.kind = CoordAction::Kind::Shift;
        } else if (tok.size() == 6 && tok[2] == "torus") {
          c.kind = CoordAction::Kind::Torus;
          c.sign = to_int(tok[3], "torus sign");
          c.row = to_int(tok[4], "torus row") - 1;
          if ((c.sign != 1 && c.sign != -1) || c.row < 0 || c.row > 1) throw err("torus sign ±1 and row 1 or 2");
        } else {
          throw err("expected: coord <name> shift a|b  or  coord <name> torus ±1 <row> a|b");
        }
        c.name = tok[1];
        const std::string& g = tok.back();
        if (g != "a" && g != "b") throw err("coordinate group must be a or b");
        c.group = g[0];
        m.lattice.coords.push_back(c);
      } else if (cmd == "foliation") {
        if (tok.size() < 9 || tok[5] != "transverse") throw err("expected: foliation <id> i j k transverse c1 c2 c3");
        Foliation f;
        f.id = tok[1];
        for (int k = 0; k < 3; ++k) f.triple[k] = to_int(tok[2 + k], "foliation");
        size_t k = 6;
        for (; k < tok.size() && tok[k] != "section"; ++k) f.transverse.push_back(tok[k]);
        f.section = k < tok.size();
        m.foliations.push_back(f);
      } else if (cmd == "polarization") {
        if (tok.size() < 2 || tok[1] != "fiber") throw err("expected: polarization fiber i j k");
        std::vector<int> idx;
        for (size_t k = 2; k < tok.size(); ++k) idx.push_back(to_int(tok[k], "polarization"));
        m.polarization_fiber = mask_of(idx);
      } else if (cmd == "fiber_volume") {
        m.flat.fiber_volume = parse_scalar(rest_after(line, 1));
      } else if (cmd == "flat_direction") {
        if (tok.size() != 3) throw err("expected: flat_direction <flat name> <model direction>");
        deferred.emplace_back(lineno, line);
      } else if (cmd == "dual") {
        if (tok.size() != 4 || tok[2] != "via") throw err("expected: dual <model> via <foliation>");
        m.flat.dual_name = tok[1];
        m.flat.dual_via = tok[3];
      } else {
        throw err("unknown directive " + cmd);
      }
    } catch (const ParseError& e) {
      std::string w = e.what();
      if (w.rfind("model line", 0) == 0) throw;
      throw err(w);
    }
  }
  if (m.name.empty()) throw ParseError("model has no name");
  if (m.dim == 0) throw ParseError("model has no dim");
  try {
    m.finalize();
  } catch (const ModelError& e) {
    throw ParseError(std::string("model ") + m.name + ": " + e.what());
  }

  FormContext ctx = m.context();
  FormContext flat_ctx;
  flat_ctx.dim = 9;
  flat_ctx.directions = {"r0"};
  for (auto& [ln, line] : deferred) {
    lineno = ln;
    auto tok = split(line);
    const std::string& cmd = tok[0];
    try {
      if (cmd == "omega") {
        m.omega = parse_form(rest_after(line, 1), ctx);
      } else if (cmd == "Omega") {
        m.Omega = parse_form(rest_after(line, 1), ctx);
      } else if (cmd == "weights") {
        for (size_t k = 1; k < tok.size(); ++k) m.weight_basis.push_back(parse_character(tok[k], ctx));
      } else if (cmd == "h10") {
        m.h10_generators.push_back(parse_form(rest_after(line, 1), ctx));
      } else if (cmd == "flat_omega") {
        m.flat.present = true;
        m.flat.omega_check = parse_form(rest_after(line, 1), flat_ctx);
      } else if (cmd == "flat_dict") {
        if (tok.size() < 3) throw err("expected: flat_dict <k> <form>");
        int k = to_int(tok[1], "flat_dict") - 1;
        if (k < 3 || k > 8) throw err("flat dictionary keys are generators 4..9");
        m.flat.dictionary[k] = parse_form(rest_after(line, 2), ctx);
      } else if (cmd == "flat_direction") {
        if (tok[1] != "r0") throw err("the flat frame has the single direction r0");
        int w = -1;
        for (size_t k = 0; k < m.direction_names.size(); ++k)
          if (m.direction_names[k] == tok[2]) w = int(k);
        if (w < 0) throw err("unknown model direction " + tok[2]);
        m.flat.direction_map[0] = w;
      }
    } catch (const ParseError& e) {
      std::string w = e.what();
      if (w.rfind("model line", 0) == 0) throw;
      throw err(w);
    }
  }
  if (m.omega.is_zero()) throw ParseError("model " + m.name + " has no omega");
  for (auto& f : m.foliations)
    for (int t : f.triple)
      if (t < 1 || t > m.dim) throw ParseError("foliation " + f.id + " index out of range");
  return m;
}

// ---------------------------------------------------------------- reports

bool ConsistencyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* ConsistencyReport::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ConsistencyReport consistency_report(const ModelManifold& m) {
  ConsistencyReport r;
  const Frame& fr = m.frame();
  int n = m.dim / 2;

  {
    Check c{"d^2 = 0", true, ""};
    for (int i = 0; i < m.dim; ++i) {
      WeightedForm dd = d(d(WeightedForm::theta(i + 1), fr), fr);
      if (!dd.is_zero()) {
        c.pass = false;
        c.detail += "d(dθ^" + std::to_string(i + 1) + ") = " + dd.str() + "; ";
      }
    }
    r.checks.push_back(c);
  }
  {
    Check c{"J^2 = -1", !m.jmap.empty(), m.jmap.empty() ? "no complex structure declared" : ""};
    for (int k = 0; k < int(m.jmap.size()); ++k) {
      int t = m.jmap[k];
      if (t < 0 || m.jmap[t] != k || m.jsign[k] * m.jsign[t] != -1) {
        c.pass = false;
        c.detail += "E" + std::to_string(k + 1) + " ";
      }
    }
    r.checks.push_back(c);
  }
  if (!m.jmap.empty()) {
    Check c{"omega J-invariant", true, ""};
    for (int a = 0; a < m.dim; ++a)
      for (int b = a + 1; b < m.dim; ++b) {
        Vec ea(m.dim, Scalar(0)), eb(m.dim, Scalar(0)), ja(m.dim, Scalar(0)), jb(m.dim, Scalar(0));
        ea[a] = 1;
        eb[b] = 1;
        ja[m.jmap[a]] = Scalar(m.jsign[a]);
        jb[m.jmap[b]] = Scalar(m.jsign[b]);
        if (evaluate(m.omega, {ea, eb}) != evaluate(m.omega, {ja, jb})) {
          c.pass = false;
          c.detail += "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") ";
        }
      }
    r.checks.push_back(c);
  }
  {
    Check c{"weight directions closed", true, ""};
    for (size_t w = 0; w < m.direction_index.size(); ++w)
      if (!fr.dtheta(m.direction_index[w]).empty()) {
        c.pass = false;
        c.detail += m.direction_names[w] + " ";
      }
    r.checks.push_back(c);
  }
  WeightedForm top = power(m.omega, n);
  WeightedForm vol = wedge(m.Omega, m.Omega.conj());
  {
    Mask full = m.full();
    bool ok = !vol.is_zero() && vol.terms().size() == 1 && vol.terms().begin()->first.second == full;
    r.checks.push_back({"Omega^Omegabar nondegenerate", ok, vol.str(m.direction_names)});
  }
  if (m.is_complex()) {
    auto parts = bidegree_split(m.Omega, m.complex_frame());
    bool pure = parts.size() == 1 && parts.begin()->first == std::pair{n, 0};
    std::string det;
    for (auto& [pq, g] : parts) det += "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ") ";
    r.checks.push_back({"Omega pure (n,0)", pure, det});
    WeightedForm dO = d(m.Omega, fr);
    r.checks.push_back({"dOmega = 0", dO.is_zero(), dO.str(m.direction_names)});
    WeightedForm dw = d(power(m.omega, n - 1), fr);
    r.checks.push_back({"balanced: d(omega^(n-1)) = 0", dw.is_zero(), dw.str(m.direction_names)});
    // |Ω|² ω^n/n! = (i^{n²}/2^n) Ω∧Ω̄; conformal balance needs the ratio constant
    bool constant_ratio = false;
    std::string ratio;
    if (!top.is_zero() && vol.terms().size() == 1 && top.terms().size() == 1) {
      auto& [kv, cv] = *vol.terms().begin();
      auto& [kt, ct] = *top.terms().begin();
      constant_ratio = kv.first.trivial() && kt.first.trivial() && kv.second == kt.second;
      if (constant_ratio) {
        Scalar fact(1);
        for (int k = 2; k <= n; ++k) fact *= Scalar(k);
        Scalar in2 = Scalar::i().pow((n * n) % 4);
        Scalar norm2 = in2 * cv * fact / (ct * Scalar(1L << n));
        ratio = "|Omega|^2 = " + norm2.str();
        constant_ratio = norm2.is_constant();
      }
    }
    r.checks.push_back({"conformally balanced: d(|Omega| omega^(n-1)) = 0", constant_ratio && dw.is_zero(), ratio});
  }
  if (m.is_symplectic()) {
    WeightedForm dw = d(m.omega, fr);
    r.checks.push_back({"domega = 0", dw.is_zero(), dw.str(m.direction_names)});
    WeightedForm dre = d(m.Omega.re(), fr);
    r.checks.push_back({"d Re Omega = 0", dre.is_zero(), dre.str(m.direction_names)});
  }
  return r;
}

std::map<std::pair<int, int>, Vec> brackets(const ModelManifold& m) {
  std::map<std::pair<int, int>, Vec> out;
  for (int j = 0; j < m.dim; ++j)
    for (int k = j + 1; k < m.dim; ++k) {
      Vec v(m.dim, Scalar(0));
      bool any = false;
      for (int i = 0; i < m.dim; ++i) {
        Scalar c = m.f(i, j, k);
        if (c.is_zero()) continue;
        v[i] = -c;
        any = true;
      }
      if (any) out[{j, k}] = v;
    }
  return out;
}

std::string bracket_string(const ModelManifold& m, int i, int j) {
  auto br = brackets(m);
  bool neg = i > j;
  auto it = br.find({std::min(i, j), std::max(i, j)});
  std::string lhs = "[E" + std::to_string(i + 1) + ", E" + std::to_string(j + 1) + "] = ";
  if (it == br.end()) return lhs + "0";
  WeightedForm as_form;  // reuse form printing with E in place of θ
  for (int t = 0; t < m.dim; ++t) as_form.add(Character(), Mask(1) << t, neg ? -it->second[t] : it->second[t]);
  std::string s = as_form.str({}, "E");
  // E^{k} -> E_k
  std::string out;
  for (size_t p = 0; p < s.size(); ++p) {
    if (s.compare(p, 3, "E^{") == 0) {
      size_t close = s.find('}', p);
      out += "E" + s.substr(p + 3, close - p - 3);
      p = close;
    } else {
      out += s[p];
    }
  }
  return lhs + out;
}

std::string structure_equations(const ModelManifold& m) {
  std::string s;
  for (int i = 0; i < m.dim; ++i) {
    WeightedForm dt = d(WeightedForm::theta(i + 1), m.frame());
    s += "dθ^" + std::to_string(i + 1) + " = " + dt.str() + "\n";
  }
  return s;
}

}  // namespace slagforge
