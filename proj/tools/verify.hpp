#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace raag::cli {

struct CheckResult {
  std::string tag;
  bool pass = true;
  int samples = 0;
  int violations = 0;
  std::string detail;
};

// Runs every property suite; results are sorted by tag and depend only on the seed.
std::vector<CheckResult> verify_all(std::uint64_t seed, int workers);

}  // namespace raag::cli
