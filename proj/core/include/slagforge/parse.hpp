#pragma once

#include "slagforge/form.hpp"
#include "slagforge/scalar.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slagforge {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// names visible to form literals
struct FormContext {
  int dim = 0;                                     // 0: no bound on t[...] indices
  std::vector<std::string> directions;             // usable inside e(...)
  std::vector<std::pair<int, int>> complex_pairs;  // 0-based, for p[k] / pb[k]
};

// +, -, *, /, ^, parentheses, implicit products, i, decimals and parameter names
Scalar parse_scalar(const std::string& text);

// scalar grammar plus e(<linear exponent>), t[i,j,...], p[k], pb[k], re(), im(), conj()
WeightedForm parse_form(const std::string& text, const FormContext& ctx);

// "1" or "e(...)"
Character parse_character(const std::string& text, const FormContext& ctx);

// whitespace-separated scalar expressions, one row per non-empty line
std::vector<std::vector<Scalar>> parse_matrix(const std::string& text, size_t rows, size_t cols);

// literal syntax accepted by parse_form
std::string form_literal(const WeightedForm& f, const std::vector<std::string>& directions);
std::string character_literal(const Character& c, const std::vector<std::string>& directions);

}  // namespace slagforge
