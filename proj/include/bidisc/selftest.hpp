#ifndef BIDISC_SELFTEST_HPP
#define BIDISC_SELFTEST_HPP

#include <string>
#include <vector>

namespace bidisc {

struct SelfTestResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Deterministic invariant sweep over all modules; one result per check.
std::vector<SelfTestResult> run_selftest(int threads = 1);

}  // namespace bidisc

#endif
