#pragma once

// Data-parallel integer kernels behind the crossing counters and the exact
// solver. Every kernel has a scalar reference in kernels::scalar and, on x86,
// an AVX2 variant in kernels::avx2. The unqualified entry points dispatch at
// runtime; TANGLE_ISA=scalar in the environment forces the reference path.

#include <cstdint>
#include <span>
#include <string_view>

namespace tangle::kernels {

enum class Isa { scalar, avx2 };

/// ISA used by the dispatching entry points.
Isa active_isa();
/// True if this CPU and build can run the AVX2 variants.
bool avx2_available();
/// Overrides dispatch (tests and benchmarks). Falls back to scalar if the
/// requested ISA is unavailable. Not thread-safe against concurrent kernels.
void set_isa(Isa isa);
std::string_view isa_name(Isa isa);

/// Number of index pairs i < j whose first and second coordinates are
/// ordered in opposite directions: (a[i]-a[j]) * (b[i]-b[j]) < 0.
std::uint64_t count_discordant_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

/// Number of pairs (i, j) with a[i] > b[j].
std::uint64_t count_greater_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

/// acc[i] += sign * delta[i]; sign is +1 or -1.
void add_rows(std::span<std::int32_t> acc, std::span<const std::int32_t> delta, int sign);

/// sum_i min(a[i], b[i]).
std::int64_t sum_min(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

namespace scalar {
std::uint64_t count_discordant_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
std::uint64_t count_greater_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
void add_rows(std::span<std::int32_t> acc, std::span<const std::int32_t> delta, int sign);
std::int64_t sum_min(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define TANGLE_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::uint64_t count_discordant_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
std::uint64_t count_greater_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
void add_rows(std::span<std::int32_t> acc, std::span<const std::int32_t> delta, int sign);
std::int64_t sum_min(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
}  // namespace avx2
#endif

}  // namespace tangle::kernels
