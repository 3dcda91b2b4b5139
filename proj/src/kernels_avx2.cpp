// AVX2 variants.  This translation unit is compiled with -mavx2; callers go
// through the runtime dispatch in kernels.cpp, which only lands here after a
// cpuid check.

#include "qcs/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "kernels_lanes.hpp"

namespace qcs::kernels {

double weighted_sum_avx2(const int8_t* chi, const double* w, std::size_t n) {
    __m256d acc_lo = _mm256_setzero_pd();  // lanes 0..3
    __m256d acc_hi = _mm256_setzero_pd();  // lanes 4..7
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m128i c8 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(chi + i));
        __m256i c32 = _mm256_cvtepi8_epi32(c8);
        __m256d f_lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(c32));
        __m256d f_hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(c32, 1));
        // mul then add, one rounding each -- matches the scalar lanes exactly
        acc_lo = _mm256_add_pd(acc_lo, _mm256_mul_pd(f_lo, _mm256_loadu_pd(w + i)));
        acc_hi = _mm256_add_pd(acc_hi, _mm256_mul_pd(f_hi, _mm256_loadu_pd(w + i + 4)));
    }
    alignas(32) double lanes[8];
    _mm256_store_pd(lanes, acc_lo);
    _mm256_store_pd(lanes + 4, acc_hi);
    detail::accumulate_tail(lanes, chi, w, i, n);
    return detail::reduce8(lanes);
}

int64_t i8_sum_avx2(const int8_t* v, std::size_t n) {
    const __m256i ones = _mm256_set1_epi8(1);
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;  // 4 x u64 partial sums of the biased bytes
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        // bias {-1,0,1} to {0,1,2} so the unsigned byte SAD applies
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(x, ones), zero));
    }
    alignas(32) uint64_t parts[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(parts), acc);
    int64_t total = int64_t(parts[0] + parts[1] + parts[2] + parts[3]) - int64_t(i);
    for (; i < n; ++i) total += v[i];
    return total;
}

}  // namespace qcs::kernels

#endif  // x86
