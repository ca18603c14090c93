#include "slagforge/property.hpp"

#include <doctest.h>

using namespace slagforge;

TEST_CASE("randomized identities") {
  auto results = run_properties(500, 7);
  CHECK(results.size() == 7);
  for (auto& r : results) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.instances >= 500);
    CHECK(r.pass());
  }
}

TEST_CASE("a different seed also passes") {
  for (auto& r : run_properties(500, 99)) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.pass());
  }
}
