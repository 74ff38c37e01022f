#include <cstdlib>
#include <string>

#include "tangle/kernels.hpp"

namespace tangle::kernels {

namespace {

struct Table {
  Isa isa;
  std::uint64_t (*discordant)(std::span<const std::int32_t>, std::span<const std::int32_t>);
  std::uint64_t (*greater)(std::span<const std::int32_t>, std::span<const std::int32_t>);
  void (*add)(std::span<std::int32_t>, std::span<const std::int32_t>, int);
  std::int64_t (*summin)(std::span<const std::int32_t>, std::span<const std::int32_t>);
};

constexpr Table kScalar{Isa::scalar, scalar::count_discordant_pairs, scalar::count_greater_pairs,
                        scalar::add_rows, scalar::sum_min};
#ifdef TANGLE_HAVE_AVX2_KERNELS
constexpr Table kAvx2{Isa::avx2, avx2::count_discordant_pairs, avx2::count_greater_pairs, avx2::add_rows,
                      avx2::sum_min};
#endif

const Table* select(Isa wanted) {
#ifdef TANGLE_HAVE_AVX2_KERNELS
  if (wanted == Isa::avx2 && avx2_available()) return &kAvx2;
#else
  (void)wanted;
#endif
  return &kScalar;
}

const Table*& current() {
  static const Table* table = [] {
    const char* env = std::getenv("TANGLE_ISA");
    if (env != nullptr && std::string(env) == "scalar") return select(Isa::scalar);
    return select(Isa::avx2);
  }();
  return table;
}

}  // namespace

bool avx2_available() {
#if defined(TANGLE_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() { return current()->isa; }

void set_isa(Isa isa) { current() = select(isa); }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

std::uint64_t count_discordant_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return current()->discordant(a, b);
}

std::uint64_t count_greater_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return current()->greater(a, b);
}

void add_rows(std::span<std::int32_t> acc, std::span<const std::int32_t> delta, int sign) {
  current()->add(acc, delta, sign);
}

std::int64_t sum_min(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return current()->summin(a, b);
}

}  // namespace tangle::kernels
