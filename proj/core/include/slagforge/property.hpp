#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slagforge {

struct PropertyResult {
  std::string name;
  size_t instances = 0;
  size_t failures = 0;
  std::string first_failure;

  bool pass() const { return failures == 0 && instances > 0; }
};

// randomized identity checks over the builtin frames
PropertyResult check_d_squared(size_t n, uint64_t seed);
PropertyResult check_jacobi(size_t n, uint64_t seed);
PropertyResult check_leibniz(size_t n, uint64_t seed);
PropertyResult check_star_star(size_t n, uint64_t seed);
PropertyResult check_del_delbar(size_t n, uint64_t seed);
PropertyResult check_fm_linearity(size_t n, uint64_t seed);
PropertyResult check_field_axioms(size_t n, uint64_t seed);

std::vector<PropertyResult> run_properties(size_t n, uint64_t seed);

}  // namespace slagforge
