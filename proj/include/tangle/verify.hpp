#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct VerifyOptions {
  /// Largest size enumerated exhaustively (criteria 3, 6, 8); at most 6.
  std::size_t max_size = 5;
  /// Random instances of sizes 6..10 for criterion 3.
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  /// Criterion 4: at least this many random instances of sizes 8..12, and
  /// more until `one_cross_unique` of them have exactly one set.
  std::size_t one_cross_samples = 500;
  std::size_t one_cross_unique = 50;
};

/// Minimum crossing count over every pair of leaf orders. Exponential in
/// both trees; independent of exact_crt.
std::uint64_t brute_force_crt(const Tanglegram& tg);

/// Runs the acceptance criteria in order. `report` (optional) sees each
/// result as soon as it is known. Criteria 4 and 7 share one run.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options,
                                            const std::function<void(const CriterionResult&)>& report = {});

/// One line per criterion: "PASS  3 oracle-equivalence   1.20s / 120s  detail".
std::string format_result(const CriterionResult& r);

struct SurveyBin {
  std::size_t count = 0;
  std::uint64_t max_crt = 0;
  std::size_t unresolved = 0;  // budget ran out; max_crt then counts the upper bound
};

/// Random tanglegrams of one size binned by the number of cross-responsible sets.
std::map<std::size_t, SurveyBin> survey(std::size_t size, std::size_t samples, std::uint64_t seed,
                                        const CrtOptions& options = {});

}  // namespace tangle
