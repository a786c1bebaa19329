#include "kcut/kernels.hpp"

#include <immintrin.h>

namespace kcut::kernels::avx2 {

std::int64_t crossing_weight(const std::int32_t* u, const std::int32_t* v,
                             const std::int64_t* w, std::size_t m, const std::int32_t* label) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t e = 0;
  for (; e + 8 <= m; e += 8) {
    __m256i iu = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + e));
    __m256i iv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + e));
    __m256i lu = _mm256_i32gather_epi32(label, iu, 4);
    __m256i lv = _mm256_i32gather_epi32(label, iv, 4);
    // All-ones lanes where the labels differ.
    __m256i differ = _mm256_xor_si256(_mm256_cmpeq_epi32(lu, lv), _mm256_set1_epi32(-1));
    __m256i lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(differ));
    __m256i hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(differ, 1));
    __m256i w0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + e));
    __m256i w1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + e + 4));
    acc = _mm256_add_epi64(acc, _mm256_and_si256(lo, w0));
    acc = _mm256_add_epi64(acc, _mm256_and_si256(hi, w1));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; e < m; ++e) {
    if (label[u[e]] != label[v[e]]) total += w[e];
  }
  return total;
}

std::int64_t crossing_count(const std::int32_t* u, const std::int32_t* v, std::size_t m,
                            const std::int32_t* label) {
  std::int64_t total = 0;
  std::size_t e = 0;
  for (; e + 8 <= m; e += 8) {
    __m256i iu = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + e));
    __m256i iv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + e));
    __m256i lu = _mm256_i32gather_epi32(label, iu, 4);
    __m256i lv = _mm256_i32gather_epi32(label, iv, 4);
    int same = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(lu, lv)));
    total += 8 - __builtin_popcount(static_cast<unsigned>(same));
  }
  for (; e < m; ++e) total += label[u[e]] != label[v[e]];
  return total;
}

}  // namespace kcut::kernels::avx2
