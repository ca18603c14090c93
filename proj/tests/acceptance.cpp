#include "slagforge/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

using namespace slagforge;

int main(int argc, char** argv) {
  bool verbose = false;
  size_t n = 500;
  for (int a = 1; a < argc; ++a) {
    if (!std::strcmp(argv[a], "-v")) verbose = true;
    else n = size_t(std::strtoul(argv[a], nullptr, 10));
  }
  int failed = 0;
  for (int id = 1; id <= kCriteria; ++id) {
    CriterionResult r = run_criterion(id, n);
    std::printf("%s AC%-2d %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str());
    if (verbose || !r.pass)
      for (auto& line : r.details) std::printf("       %s\n", line.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d/%d criteria pass\n", kCriteria - failed, kCriteria);
  return failed ? 1 : 0;
}
