#include <doctest.h>

#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/gen.hpp"
#include "tangle/verify.hpp"

using namespace tangle;

TEST_CASE("brute_force_crt agrees with the test oracle") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto tg = random_tanglegram(1 + seed % 7, seed);
    REQUIRE(brute_force_crt(tg) == oracle::brute_crt(tg));
  }
  CHECK(brute_force_crt(build_family(Family::T2, 2)) == 4);
}

TEST_CASE("acceptance run on small settings") {
  VerifyOptions o;
  o.max_size = 4;
  o.samples = 20;
  o.one_cross_samples = 50;
  o.one_cross_unique = 5;
  std::vector<int> seen;
  auto results = run_acceptance(o, [&](const CriterionResult& r) { seen.push_back(r.id); });
  REQUIRE(results.size() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(results[std::size_t(i)].id == i + 1);
    CHECK_MESSAGE(results[std::size_t(i)].pass, format_result(results[std::size_t(i)]));
  }
  CHECK(seen.size() == 8);
  CHECK(format_result(results[0]).rfind("PASS 1 kuratowski-fixtures", 0) == 0);

  o.max_size = 7;
  CHECK_THROWS_AS(run_acceptance(o), DomainError);
}

TEST_CASE("survey is deterministic and bins by set count") {
  auto a = survey(6, 60, 9);
  auto b = survey(6, 60, 9);
  std::size_t total = 0;
  for (const auto& [k, bin] : a) {
    total += bin.count;
    CHECK(b.at(k).count == bin.count);
    CHECK(b.at(k).max_crt == bin.max_crt);
    if (k == 0) CHECK(bin.max_crt == 0);
    else CHECK(bin.max_crt >= 1);
    if (k == 1) CHECK(bin.max_crt == 1);
  }
  CHECK(total == 60);
}
