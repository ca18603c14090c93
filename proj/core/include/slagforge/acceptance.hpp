#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slagforge {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // one line per sub-check, prefixed ok / FAIL
};

constexpr int kCriteria = 12;

CriterionResult run_criterion(int id, size_t property_instances = 500, uint64_t seed = 20240611);
std::vector<CriterionResult> run_acceptance(size_t property_instances = 500, uint64_t seed = 20240611);

}  // namespace slagforge
