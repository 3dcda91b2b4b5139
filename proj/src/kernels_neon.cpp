// NEON variants (aarch64).  Same 8-lane accumulation contract as the scalar
// and AVX2 paths; lanes live in four float64x2 registers.

#include "qcs/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernels_lanes.hpp"

namespace qcs::kernels {

double weighted_sum_neon(const int8_t* chi, const double* w, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);  // lanes 0,1
    float64x2_t acc23 = vdupq_n_f64(0.0);  // lanes 2,3
    float64x2_t acc45 = vdupq_n_f64(0.0);  // lanes 4,5
    float64x2_t acc67 = vdupq_n_f64(0.0);  // lanes 6,7
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        int16x8_t c16 = vmovl_s8(vld1_s8(chi + i));
        int32x4_t lo32 = vmovl_s16(vget_low_s16(c16));
        int32x4_t hi32 = vmovl_s16(vget_high_s16(c16));
        float64x2_t f01 = vcvtq_f64_s64(vmovl_s32(vget_low_s32(lo32)));
        float64x2_t f23 = vcvtq_f64_s64(vmovl_s32(vget_high_s32(lo32)));
        float64x2_t f45 = vcvtq_f64_s64(vmovl_s32(vget_low_s32(hi32)));
        float64x2_t f67 = vcvtq_f64_s64(vmovl_s32(vget_high_s32(hi32)));
        // mul then add (no fused op) to match the scalar lane arithmetic
        acc01 = vaddq_f64(acc01, vmulq_f64(f01, vld1q_f64(w + i)));
        acc23 = vaddq_f64(acc23, vmulq_f64(f23, vld1q_f64(w + i + 2)));
        acc45 = vaddq_f64(acc45, vmulq_f64(f45, vld1q_f64(w + i + 4)));
        acc67 = vaddq_f64(acc67, vmulq_f64(f67, vld1q_f64(w + i + 6)));
    }
    double lanes[8];
    vst1q_f64(lanes + 0, acc01);
    vst1q_f64(lanes + 2, acc23);
    vst1q_f64(lanes + 4, acc45);
    vst1q_f64(lanes + 6, acc67);
    detail::accumulate_tail(lanes, chi, w, i, n);
    return detail::reduce8(lanes);
}

int64_t i8_sum_neon(const int8_t* v, std::size_t n) {
    int64_t total = 0;
    std::size_t i = 0;
    int32x4_t acc = vdupq_n_s32(0);
    for (; i + 16 <= n; i += 16) {
        int16x8_t pairs = vpaddlq_s8(vld1q_s8(v + i));
        acc = vpadalq_s16(acc, pairs);
    }
    total += vaddvq_s32(acc);
    for (; i < n; ++i) total += v[i];
    return total;
}

}  // namespace qcs::kernels

#endif  // aarch64
