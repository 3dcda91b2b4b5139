#pragma once

#include <cstddef>
#include <cstdint>

namespace qcs::kernels::detail {

// Fixed reduction order for the 8 accumulator lanes.
inline double reduce8(const double lanes[8]) {
    const double s01 = lanes[0] + lanes[1];
    const double s23 = lanes[2] + lanes[3];
    const double s45 = lanes[4] + lanes[5];
    const double s67 = lanes[6] + lanes[7];
    return (s01 + s23) + (s45 + s67);
}

// Scalar continuation for indices [begin, n); begin must be the first index
// a vector loop did not consume so that lane = i mod 8 stays consistent.
inline void accumulate_tail(double lanes[8], const int8_t* chi, const double* w,
                            std::size_t begin, std::size_t n) {
    for (std::size_t i = begin; i < n; ++i) lanes[i & 7] += double(chi[i]) * w[i];
}

}  // namespace qcs::kernels::detail
