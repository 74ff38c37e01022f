#include "tangle/kernels.hpp"

#include <algorithm>

namespace tangle::kernels::scalar {

std::uint64_t count_discordant_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      bool da = a[i] < a[j];
      bool db = b[i] < b[j];
      if (a[i] != a[j] && b[i] != b[j] && da != db) ++n;
    }
  }
  return n;
}

std::uint64_t count_greater_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  std::uint64_t n = 0;
  for (std::int32_t x : a)
    for (std::int32_t y : b) n += x > y;
  return n;
}

void add_rows(std::span<std::int32_t> acc, std::span<const std::int32_t> delta, int sign) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += sign * delta[i];
}

std::int64_t sum_min(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::min(a[i], b[i]);
  return s;
}

}  // namespace tangle::kernels::scalar
