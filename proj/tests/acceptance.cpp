// Runs every acceptance criterion at its stated limits; one line each.

#include <cstdio>

#include "tangle/verify.hpp"

int main() {
  tangle::VerifyOptions options;
  std::size_t failed = 0;
  tangle::run_acceptance(options, [&](const tangle::CriterionResult& r) {
    std::printf("%s\n", tangle::format_result(r).c_str());
    std::fflush(stdout);
    failed += !r.pass;
  });
  std::printf("%zu of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
