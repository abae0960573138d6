#include "partsat/kernels.hpp"

#ifdef PARTSAT_HAVE_AVX2_KERNELS

#include <immintrin.h>

// AVX2 variants of the occurrence-count reductions. 8 int32 lanes per step,
// widened into two 4x64 accumulators so no intermediate can overflow. Tails
// shorter than 8 fall through to the scalar kernels; results are bit-exact
// against them for the full int32 range.

namespace partsat::kernels::avx2 {

namespace {

inline std::uint64_t hsum_epi64(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

// acc_lo/acc_hi += sign-extended halves of the 8 int32 lanes in v.
inline void accumulate(__m256i v, __m256i& acc_lo, __m256i& acc_hi) {
  acc_lo = _mm256_add_epi64(acc_lo, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(v)));
  acc_hi = _mm256_add_epi64(acc_hi, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(v, 1)));
}

inline __m256i abs_epi64(__m256i v) {
  __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), v);
  return _mm256_sub_epi64(_mm256_xor_si256(v, neg), neg);
}

} // namespace

std::uint64_t sum_min(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  __m256i acc_lo = _mm256_setzero_si256();
  __m256i acc_hi = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    accumulate(_mm256_min_epi32(va, vb), acc_lo, acc_hi);
  }
  return hsum_epi64(_mm256_add_epi64(acc_lo, acc_hi)) +
         scalar::sum_min(a + i, b + i, n - i);
}

std::uint64_t sum_max(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  __m256i acc_lo = _mm256_setzero_si256();
  __m256i acc_hi = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    accumulate(_mm256_max_epi32(va, vb), acc_lo, acc_hi);
  }
  return hsum_epi64(_mm256_add_epi64(acc_lo, acc_hi)) +
         scalar::sum_max(a + i, b + i, n - i);
}

std::uint64_t sum_absdiff(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // widen before subtracting: the difference of two int32 needs 33 bits
    __m256i alo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(va));
    __m256i ahi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(va, 1));
    __m256i blo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(vb));
    __m256i bhi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(vb, 1));
    acc = _mm256_add_epi64(acc, abs_epi64(_mm256_sub_epi64(alo, blo)));
    acc = _mm256_add_epi64(acc, abs_epi64(_mm256_sub_epi64(ahi, bhi)));
  }
  return hsum_epi64(acc) + scalar::sum_absdiff(a + i, b + i, n - i);
}

std::uint64_t select_sum(const std::int32_t* a, const std::int32_t* b,
                         const std::int8_t* sign, std::size_t n) {
  __m256i acc_lo = _mm256_setzero_si256();
  __m256i acc_hi = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m128i s8 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(sign + i));
    __m256i s32 = _mm256_cvtepi8_epi32(s8);
    __m256i take_a = _mm256_cmpgt_epi32(s32, _mm256_setzero_si256());
    accumulate(_mm256_blendv_epi8(vb, va, take_a), acc_lo, acc_hi);
  }
  return hsum_epi64(_mm256_add_epi64(acc_lo, acc_hi)) +
         scalar::select_sum(a + i, b + i, sign + i, n - i);
}

} // namespace partsat::kernels::avx2

#endif // PARTSAT_HAVE_AVX2_KERNELS
