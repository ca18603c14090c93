#include "slagforge/lattice.hpp"

#include "slagforge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

namespace slagforge {

EigenData eigen_data(const IntMat2& M) {
  long det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  if (det != 1) throw DomainError("M must have determinant 1");
  long tr = M[0][0] + M[1][1];
  if (std::labs(tr) <= 2) throw DomainError("M is not hyperbolic: |Tr M| <= 2");
  EigenData e;
  e.M = M;
  e.discriminant = quad_sqrt_check(Integer(tr * tr - 4));
  Rational half_tr(tr, 2);
  half_tr.canonicalize();
  if (e.discriminant.perfect_square) {
    Rational r = Rational(e.discriminant.root) / 2;
    e.expanding = QuadInt(half_tr + r);
    e.contracting = QuadInt(half_tr - r);
  } else {
    Rational s = Rational(e.discriminant.square_part) / 2;
    e.expanding = QuadInt(half_tr, s, e.discriminant.D);
    e.contracting = QuadInt(half_tr, -s, e.discriminant.D);
  }
  // |e^{λ}| > 1
  if ((e.expanding.abs() - QuadInt(1)).sign() < 0) std::swap(e.expanding, e.contracting);
  e.irrational = !e.expanding.is_rational();

  QuadMat2 Mq = to_quad(M);
  auto left_eigenvector = [&](const QuadInt& mu) -> std::array<QuadInt, 2> {
    if (M[1][0] != 0) return {QuadInt(1), (mu - Mq[0][0]) / Mq[1][0]};
    return {(mu - Mq[1][1]) / Mq[0][1], QuadInt(1)};
  };
  e.P = {left_eigenvector(e.expanding), left_eigenvector(e.contracting)};
  QuadMat2 conj = mul(mul(e.P, Mq), inverse(e.P));
  QuadMat2 D{{{e.expanding, QuadInt(0)}, {QuadInt(0), e.contracting}}};
  if (!(conj == D)) throw std::logic_error("eigenvector matrix failed to diagonalize M");
  return e;
}

IntMat2 parse_int_mat2(const std::string& s) {
  std::vector<long> v;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ' || c == ';') {
      if (!cur.empty()) {
        try {
          size_t used = 0;
          v.push_back(std::stol(cur, &used));
          if (used != cur.size()) throw std::invalid_argument(cur);
        } catch (const std::exception&) {
          throw ParseError("matrix entries must be integers, got \"" + cur + "\"");
        }
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  if (v.size() != 4) throw ParseError("expected four integers m11,m12,m21,m22");
  return {{{v[0], v[1]}, {v[2], v[3]}}};
}

SearchResult diag_integer_matrix_search(const IntMat2& M, int bound) {
  EigenData e = eigen_data(M);
  SearchResult res;
  if (bound <= 0) return res;
  // column 1 must be killed by row 2 of P, column 2 by row 1
  long side = 2L * bound + 1;
  size_t cells = size_t(side * side);
  std::array<std::optional<std::array<long, 2>>, 2> found;
  std::mutex mu;
  std::atomic<size_t> seen{0};
  for (int col = 0; col < 2; ++col) {
    const auto& row = e.P[1 - col];
    parallel_for(cells, [&](size_t n) {
      long c0 = long(n / side) - bound, c1 = long(n % side) - bound;
      if (c0 == 0 && c1 == 0) return;
      seen.fetch_add(1, std::memory_order_relaxed);
      if ((row[0] * QuadInt(c0) + row[1] * QuadInt(c1)).is_zero()) {
        std::lock_guard lock(mu);
        if (!found[col]) found[col] = std::array<long, 2>{c0, c1};
      }
    });
  }
  res.candidates = seen.load();
  if (found[0] && found[1])
    res.witness = IntMat2{{{(*found[0])[0], (*found[1])[0]}, {(*found[0])[1], (*found[1])[1]}}};
  return res;
}

// ---------------------------------------------------------------- closure

std::string kind_name(ClosureVerdict::Kind k) {
  switch (k) {
    case ClosureVerdict::Kind::ClosedIff: return "closed_iff";
    case ClosureVerdict::Kind::NeverClosed: return "never_closed";
    case ClosureVerdict::Kind::AlwaysClosed: return "always_closed";
  }
  return "?";
}

std::string ClosureVerdict::str() const {
  std::string s = kind_name(kind);
  if (kind == Kind::ClosedIff) {
    s += " {";
    for (size_t k = 0; k < condition.size(); ++k) s += (k ? " = " : "") + condition[k];
    s += " = 0}";
  }
  return s;
}

namespace {

// rational rank of {g ∈ Z² : row·g = 0 for every row}, rows over Q(√D)
size_t rational_rank(const std::vector<std::array<QuadInt, 2>>& rows) {
  Mat m;
  for (auto& r : rows) {
    m.push_back({Scalar(r[0].a()), Scalar(r[1].a())});
    m.push_back({Scalar(r[0].b()), Scalar(r[1].b())});
  }
  return m.empty() ? 0 : rank(m);
}

}  // namespace

ClosureVerdict classify_leaf_closure(const ModelManifold& m, const std::string& foliation_id) {
  const Foliation* fol = m.foliation(foliation_id);
  if (!fol) throw DomainError("unknown foliation " + foliation_id + " on " + m.name);
  if (!m.lattice.present || m.lattice.coords.empty())
    throw DomainError("model " + m.name + " declares no lattice action");
  EigenData e = eigen_data(m.lattice.M);

  std::vector<const CoordAction*> acts;
  for (auto& name : fol->transverse) {
    const CoordAction* found = nullptr;
    for (auto& c : m.lattice.coords)
      if (c.name == name) found = &c;
    if (!found) throw DomainError("foliation " + foliation_id + " uses undeclared coordinate " + name);
    acts.push_back(found);
  }

  ClosureVerdict v;
  for (size_t p = 0; p < acts.size(); ++p) v.parameters.push_back(std::string(1, char('A' + p)));
  size_t patterns = size_t(1) << acts.size();
  std::vector<bool> closed(patterns);
  for (size_t zero = 0; zero < patterns; ++zero) {
    bool a_free = true, b_free = true;
    std::vector<std::array<QuadInt, 2>> rows_a, rows_b;
    for (size_t p = 0; p < acts.size(); ++p) {
      const CoordAction& c = *acts[p];
      bool vanishes = zero & (size_t(1) << p);
      if (c.kind == CoordAction::Kind::Shift) {
        (c.group == 'a' ? a_free : b_free) = false;
        continue;
      }
      // a nonzero value scaled by e^{±λa} returns only for a = 0
      if (!vanishes) a_free = false;
      (c.group == 'a' ? rows_a : rows_b).push_back(e.P[c.row]);
    }
    int rank_stab = int(a_free) + int(b_free) + (2 - int(rational_rank(rows_a))) + (2 - int(rational_rank(rows_b)));
    v.stabilizer_rank[zero] = rank_stab;
    closed[zero] = rank_stab == int(acts.size());
  }

  size_t n_closed = std::count(closed.begin(), closed.end(), true);
  if (n_closed == 0) {
    v.kind = ClosureVerdict::Kind::NeverClosed;
  } else if (n_closed == patterns) {
    v.kind = ClosureVerdict::Kind::AlwaysClosed;
  } else {
    size_t need = patterns - 1;
    for (size_t z = 0; z < patterns; ++z)
      if (closed[z]) need &= z;
    for (size_t z = 0; z < patterns; ++z)
      if (closed[z] != ((z & need) == need))
        throw std::logic_error("closure pattern of " + foliation_id + " is not cut out by vanishing parameters");
    v.kind = ClosureVerdict::Kind::ClosedIff;
    for (size_t p = 0; p < acts.size(); ++p)
      if (need & (size_t(1) << p)) v.condition.push_back(v.parameters[p]);
  }
  return v;
}

bool character_trivial(const Character& c, const ModelManifold& m) {
  if (c.trivial()) return true;
  if (!m.lattice.present) throw DomainError("character " + c.str(m.direction_names) + " on a model without lattice data");
  const auto& L = m.lattice;
  for (int w = 0; w < c.size(); ++w) {
    const Scalar& k = c.coeff(w);
    if (k.is_zero()) continue;
    const std::string& dir = m.direction_names.at(w);
    if (dir == L.shift_direction) return false;
    if (dir != L.period_direction) throw DomainError("direction " + dir + " carries no lattice data");
    // e^{k·period} = 1  <=>  k/(i·unit) · q ∈ Z
    auto r = (k / (Scalar::i() * L.tau.unit)).as_rational();
    if (!r) return false;
    auto q = L.tau.active_q();
    if (!q) return false;
    Rational rq = *r * *q;
    rq.canonicalize();
    if (rq.get_den() != 1) return false;
  }
  return true;
}

BundleCheck verify_lattice_bundle(const IntMat2& M, const QuadMat2& P) {
  BundleCheck out;
  long dm = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  if (dm != 1 && dm != -1) {
    out.detail = "M is not unimodular";
    return out;
  }
  if (det(P).is_zero()) {
    out.detail = "P is singular";
    return out;
  }
  QuadMat2 D = mul(mul(P, to_quad(M)), inverse(P));
  if (!D[0][1].is_zero() || !D[1][0].is_zero()) {
    out.detail = "P M P^-1 = " + str(D) + " is not diagonal";
    return out;
  }
  // the shifted generators are the columns of D P = P M, an integral unimodular recombination of P
  QuadMat2 shifted = mul(D, P);
  QuadMat2 recomb = mul(inverse(P), shifted);
  for (auto& row : recomb)
    for (auto& x : row)
      if (!x.is_rational() || x.a().get_den() != 1) {
        out.detail = "recombination " + str(recomb) + " is not integral";
        return out;
      }
  out.ok = true;
  out.detail = "D P = P M with D = " + str(D);
  return out;
}

BundleCheck verify_lattice_bundle(const ModelManifold& m) {
  if (!m.lattice.present) return {true, "no lattice bundle declared"};
  EigenData e = eigen_data(m.lattice.M);
  return verify_lattice_bundle(m.lattice.M, e.P);
}

namespace {

using Laurent = std::map<int, QuadInt>;  // power of μ -> coefficient

void add_to(Laurent& acc, int p, const QuadInt& c) {
  if (c.is_zero()) return;
  QuadInt& slot = acc[p];
  slot += c;
  if (slot.is_zero()) acc.erase(p);
}

using LMat = std::array<std::array<Laurent, 2>, 2>;

LMat lmul(const LMat& x, const LMat& y) {
  LMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (auto& [p, a] : x[i][k])
          for (auto& [q, b] : y[k][j]) add_to(r[i][j], p + q, a * b);
  return r;
}

LMat lift(const QuadMat2& m) {
  LMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) add_to(r[i][j], 0, m[i][j]);
  return r;
}

}  // namespace

bool verify_torus_conjugation(const IntMat2& M, int a) {
  EigenData e = eigen_data(M);
  QuadMat2 Ma{{{QuadInt(1), QuadInt(0)}, {QuadInt(0), QuadInt(1)}}};
  QuadMat2 step = a >= 0 ? to_quad(M) : inverse(to_quad(M));
  for (int k = 0; k < std::abs(a); ++k) Ma = mul(Ma, step);
  LMat scale, unscale;
  add_to(scale[0][0], 1, QuadInt(1));
  add_to(scale[1][1], -1, QuadInt(1));
  add_to(unscale[0][0], -1, QuadInt(1));
  add_to(unscale[1][1], 1, QuadInt(1));
  LMat lhs = lmul(lmul(lmul(scale, lift(e.P)), lift(Ma)), lmul(lift(inverse(e.P)), unscale));
  LMat want;
  add_to(want[0][0], 0, e.expanding.pow(a));
  add_to(want[1][1], 0, e.contracting.pow(a));
  return lhs == want;
}

}  // namespace slagforge
