#include "slagforge/parse.hpp"

#include <cctype>
#include <sstream>

namespace slagforge {

namespace {

std::string ascii_symbols(std::string s) {
  static const std::pair<const char*, const char*> subs[] = {
      {"λ", "lambda"}, {"τ", "tau"}, {"μ", "mu"}, {"−", "-"}, {"·", "*"}};
  for (auto& [from, to] : subs) {
    size_t at = 0;
    std::string f(from);
    while ((at = s.find(f, at)) != std::string::npos) {
      // keep identifiers separated from neighbours
      s.replace(at, f.size(), std::string(" ") + to + " ");
      at += std::string(to).size() + 2;
    }
  }
  return s;
}

std::optional<Scalar> as_scalar(const WeightedForm& f) {
  if (f.is_zero()) return Scalar(0);
  if (f.terms().size() != 1) return std::nullopt;
  auto& [k, c] = *f.terms().begin();
  if (!k.first.trivial() || k.second != 0) return std::nullopt;
  return c;
}

class Parser {
 public:
  Parser(std::string text, const FormContext& ctx) : s_(ascii_symbols(std::move(text))), ctx_(ctx) {}

  WeightedForm run() {
    WeightedForm f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@'; }

  Scalar need_scalar(const WeightedForm& f, const char* where) {
    auto s = as_scalar(f);
    if (!s) fail(std::string(where) + " needs a scalar operand");
    return *s;
  }

  WeightedForm expr() {
    WeightedForm acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  WeightedForm term() {
    WeightedForm acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        // tolerate "* +" and "* -" as written in printed systems
        acc = wedge(acc, unary());
      } else if (c == '/') {
        ++pos_;
        Scalar den = need_scalar(unary(), "division");
        if (den.is_zero()) fail("division by zero");
        acc *= den.inverse();
      } else if (c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
        acc = wedge(acc, power());
      } else {
        return acc;
      }
    }
  }

  WeightedForm unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  WeightedForm power() {
    WeightedForm base = primary();
    if (!eat('^')) return base;
    Scalar e = need_scalar(unary(), "exponent");
    auto q = e.as_rational();
    if (!q || q->get_den() != 1) fail("exponent must be an integer");
    Scalar b = need_scalar(base, "power");
    long k = q->get_num().get_si();
    if (b.is_zero() && k < 0) fail("zero to a negative power");
    return WeightedForm(b.pow(int(k)));
  }

  Rational number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Integer whole(s_.substr(start, pos_ - start));
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string frac = s_.substr(fs, pos_ - fs);
      if (frac.empty()) return Rational(whole);
      Integer scale = 1;
      for (size_t k = 0; k < frac.size(); ++k) scale *= 10;
      Rational r(whole * scale + Integer(frac), scale);
      r.canonicalize();
      return r;
    }
    return Rational(whole);
  }

  std::string identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::vector<int> index_list() {
    expect('[');
    std::vector<int> out;
    if (eat(']')) return out;
    do {
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an index");
      out.push_back(int(number().get_num().get_si()));
    } while (eat(','));
    expect(']');
    return out;
  }

  WeightedForm theta_monomial(const std::vector<int>& idx) {
    WeightedForm f(Scalar(1));
    int bound = ctx_.dim > 0 ? ctx_.dim : 32;
    for (int k : idx) {
      if (k < 1 || k > bound) fail("coframe index " + std::to_string(k) + " out of range");
      f = wedge(f, WeightedForm::theta(k));
    }
    return f;
  }

  WeightedForm complex_one_form(int k, bool bar) {
    if (ctx_.complex_pairs.empty()) fail("p[k] needs a complex structure");
    if (k < 1 || k > int(ctx_.complex_pairs.size())) fail("complex index out of range");
    auto [a, b] = ctx_.complex_pairs[k - 1];
    WeightedForm f = WeightedForm::theta(a + 1);
    f += WeightedForm::theta(b + 1) * (bar ? -Scalar::i() : Scalar::i());
    return f;
  }

  Character character_argument() {
    bool saved = in_char_;
    in_char_ = true;
    WeightedForm inner = expr();
    in_char_ = saved;
    expect(')');
    Scalar s = need_scalar(inner, "exponent of e()");
    Poly rest = s.num();
    std::vector<Scalar> coeffs(ctx_.directions.size(), Scalar(0));
    std::vector<int> vars;
    for (auto& d : ctx_.directions) vars.push_back(ParamRegistry::index("@" + d));
    for (int v : vars)
      if (s.den().degree(v) > 0) fail("exponent must be linear in the coordinates");
    for (size_t w = 0; w < vars.size(); ++w) {
      if (rest.degree(vars[w]) > 1) fail("exponent must be linear in the coordinates");
      Poly c1 = rest.coeff(vars[w], 1);
      for (int v : vars)
        if (c1.degree(v) > 0) fail("exponent must be linear in the coordinates");
      coeffs[w] = normalize(c1, s.den());
      rest = rest.coeff(vars[w], 0);
    }
    if (!rest.is_zero()) fail("exponent of e() has a constant part");
    return Character(std::move(coeffs));
  }

  WeightedForm primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      WeightedForm f = expr();
      expect(')');
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return WeightedForm(Scalar(number()));
    if (!ident_start(c)) fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
    std::string id = identifier();
    if (id == "t" && peek() == '[') return theta_monomial(index_list());
    if ((id == "p" || id == "pb") && peek() == '[') {
      auto idx = index_list();
      if (idx.size() != 1) fail("p[k] takes one index");
      return complex_one_form(idx[0], id == "pb");
    }
    if (id == "e" && peek() == '(') {
      ++pos_;
      return WeightedForm::mono(0, Scalar(1), character_argument());
    }
    if ((id == "re" || id == "im" || id == "conj") && peek() == '(') {
      ++pos_;
      WeightedForm f = expr();
      expect(')');
      return id == "re" ? f.re() : id == "im" ? f.im() : f.conj();
    }
    if (id == "i") return WeightedForm(Scalar::i());
    if (id[0] == '@') fail("reserved identifier " + id);
    for (auto& d : ctx_.directions)
      if (d == id) {
        if (!in_char_) fail("coordinate " + id + " may only appear inside e()");
        return WeightedForm(Scalar::param("@" + id));
      }
    return WeightedForm(Scalar::param(id));
  }

  std::string s_;
  const FormContext& ctx_;
  size_t pos_ = 0;
  bool in_char_ = false;
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
  static const FormContext none;
  WeightedForm f = Parser(text, none).run();
  auto s = as_scalar(f);
  if (!s) throw ParseError("not a scalar expression: \"" + text + "\"");
  return *s;
}

WeightedForm parse_form(const std::string& text, const FormContext& ctx) { return Parser(text, ctx).run(); }

Character parse_character(const std::string& text, const FormContext& ctx) {
  WeightedForm f = parse_form(text, ctx);
  if (f.terms().size() != 1) throw ParseError("not a character: \"" + text + "\"");
  auto& [k, c] = *f.terms().begin();
  if (k.second != 0 || !c.is_one()) throw ParseError("not a character: \"" + text + "\"");
  return k.first;
}

std::vector<std::vector<Scalar>> parse_matrix(const std::string& text, size_t rows, size_t cols) {
  std::vector<std::vector<Scalar>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<Scalar> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_scalar(tok));
    if (row.empty()) continue;
    if (row.size() != cols)
      throw ParseError("matrix row " + std::to_string(out.size() + 1) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(cols));
    out.push_back(std::move(row));
  }
  if (out.size() != rows)
    throw ParseError("matrix has " + std::to_string(out.size()) + " rows, expected " + std::to_string(rows));
  return out;
}

std::string character_literal(const Character& c, const std::vector<std::string>& directions) {
  if (c.trivial()) return "1";
  std::string s;
  for (int w = 0; w < c.size(); ++w) {
    if (c.coeff(w).is_zero()) continue;
    std::string name = w < int(directions.size()) ? directions[w] : "d" + std::to_string(w);
    if (!s.empty()) s += "+";
    s += "(" + c.coeff(w).str() + ")*" + name;
  }
  return "e(" + s + ")";
}

std::string form_literal(const WeightedForm& f, const std::vector<std::string>& directions) {
  if (f.is_zero()) return "0";
  std::string s;
  for (auto& [k, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    if (!k.first.trivial()) s += "*" + character_literal(k.first, directions);
    if (k.second) {
      s += "*t[";
      bool first = true;
      for (int i : indices(k.second)) {
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
      }
      s += "]";
    }
  }
  return s;
}

}  // namespace slagforge
