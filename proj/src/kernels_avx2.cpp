// Compiled with -mavx2; only reached through the runtime dispatcher when the
// CPU reports AVX2 support.
#include "tangle/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace tangle::kernels::avx2 {

namespace {

inline __m256i load8(const std::int32_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline unsigned popmask(__m256i m) {
  return static_cast<unsigned>(std::popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(m)))));
}

}  // namespace

std::uint64_t count_discordant_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  const std::size_t n = a.size();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const __m256i ai = _mm256_set1_epi32(a[i]);
    const __m256i bi = _mm256_set1_epi32(b[i]);
    std::size_t j = i + 1;
    for (; j + 8 <= n; j += 8) {
      __m256i aj = load8(a.data() + j);
      __m256i bj = load8(b.data() + j);
      __m256i a_up = _mm256_cmpgt_epi32(aj, ai);
      __m256i a_dn = _mm256_cmpgt_epi32(ai, aj);
      __m256i b_up = _mm256_cmpgt_epi32(bj, bi);
      __m256i b_dn = _mm256_cmpgt_epi32(bi, bj);
      __m256i disc = _mm256_or_si256(_mm256_and_si256(a_up, b_dn), _mm256_and_si256(a_dn, b_up));
      total += popmask(disc);
    }
    for (; j < n; ++j) {
      bool up_a = a[j] > a[i], dn_a = a[j] < a[i];
      bool up_b = b[j] > b[i], dn_b = b[j] < b[i];
      total += (up_a && dn_b) || (dn_a && up_b);
    }
  }
  return total;
}

std::uint64_t count_greater_pairs(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  std::uint64_t total = 0;
  const std::size_t m = b.size();
  for (std::int32_t x : a) {
    const __m256i xv = _mm256_set1_epi32(x);
    std::size_t j = 0;
    for (; j + 8 <= m; j += 8) total += popmask(_mm256_cmpgt_epi32(xv, load8(b.data() + j)));
    for (; j < m; ++j) total += x > b[j];
  }
  return total;
}

void add_rows(std::span<std::int32_t> acc, std::span<const std::int32_t> delta, int sign) {
  const std::size_t n = acc.size();
  std::size_t i = 0;
  auto* out = reinterpret_cast<__m256i*>(acc.data());
  if (sign >= 0) {
    for (; i + 8 <= n; i += 8)
      _mm256_storeu_si256(out + i / 8, _mm256_add_epi32(load8(acc.data() + i), load8(delta.data() + i)));
  } else {
    for (; i + 8 <= n; i += 8)
      _mm256_storeu_si256(out + i / 8, _mm256_sub_epi32(load8(acc.data() + i), load8(delta.data() + i)));
  }
  for (; i < n; ++i) acc[i] += sign * delta[i];
}

std::int64_t sum_min(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();  // 4 x int64
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i m = _mm256_min_epi32(load8(a.data() + i), load8(b.data() + i));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(m)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(m, 1)));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) s += std::min(a[i], b[i]);
  return s;
}

}  // namespace tangle::kernels::avx2
