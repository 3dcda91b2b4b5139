#pragma once

#include <cstddef>
#include <cstdint>

namespace qcs::kernels {

enum class Backend { auto_detect, scalar, avx2, neon };

bool avx2_available();
bool neon_available();

/// Process-wide kernel selection.  auto_detect resolves to the widest ISA
/// the CPU supports.  Throws std::invalid_argument for an unavailable one.
void set_backend(Backend b);
Backend active_backend();
const char* backend_name(Backend b);

// sum_i chi[i] * w[i] with chi in {-1, 0, +1}.
//
// Accumulation contract shared by every backend: values are summed into 8
// lanes by index (lane = i mod 8, one rounding for the product and one for
// the add), and the lanes are reduced in one fixed pairwise order.  Scalar,
// AVX2 and NEON therefore return bit-identical doubles for identical input,
// which is what the equivalence tests assert.
double weighted_sum(const int8_t* chi, const double* w, std::size_t n);
double weighted_sum_scalar(const int8_t* chi, const double* w, std::size_t n);

// Exact signed sum of int8 values (order-independent).
int64_t i8_sum(const int8_t* v, std::size_t n);
int64_t i8_sum_scalar(const int8_t* v, std::size_t n);

#if defined(__x86_64__) || defined(__i386__)
double weighted_sum_avx2(const int8_t* chi, const double* w, std::size_t n);
int64_t i8_sum_avx2(const int8_t* v, std::size_t n);
#endif
#if defined(__aarch64__)
double weighted_sum_neon(const int8_t* chi, const double* w, std::size_t n);
int64_t i8_sum_neon(const int8_t* v, std::size_t n);
#endif

}  // namespace qcs::kernels
