#include <cstdio>
#include <cstdlib>
#include <string>

#include "lcalg/verify.hpp"

int main(int argc, char** argv) {
  lcalg::VerifyOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& spec : lcalg::claim_specs()) {
    lcalg::ClaimResult r = lcalg::run_claim(spec, opt);
    if (!r.passed) ++failed;
    std::printf("[%s] criterion %2d %-34s %8.1f ms  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.elapsed_ms,
                r.witness.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(lcalg::claim_specs().size()) - failed, lcalg::claim_specs().size());
  return failed == 0 ? 0 : 1;
}
