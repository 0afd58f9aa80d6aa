// Runs the nine acceptance criteria and prints one line per criterion.
// Usage: acceptance [-v] [criterion...]

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <thread>
#include <vector>

#include "pcat/verify.hpp"

int main(int argc, char** argv) {
  bool verbose = false;
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "-v") == 0) verbose = true;
    else which.push_back(std::atoi(argv[i]));
  }
  if (which.empty())
    for (int i = 1; i <= pcat::kCriteria; ++i) which.push_back(i);

  pcat::VerifyOptions options;
  options.workers = std::max(1u, std::thread::hardware_concurrency());

  int failed = 0;
  for (int index : which) {
    const pcat::SuiteReport r = pcat::run_criterion(index, options);
    std::printf("criterion %d %-30s %s  %zu/%zu checks  %.2f s\n", index, pcat::criterion_title(index).c_str(),
                r.ok() ? "PASS" : "FAIL", r.passed(), r.checks.size(), r.seconds);
    for (const auto& c : r.checks)
      if (verbose || !c.pass) std::printf("    %s %s: %s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(), c.detail.c_str());
    std::fflush(stdout);
    failed += r.ok() ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, which.size());
  return failed == 0 ? 0 : 1;
}
