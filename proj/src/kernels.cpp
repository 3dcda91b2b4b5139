#include "qcs/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "kernels_lanes.hpp"

namespace qcs::kernels {

namespace {

std::atomic<Backend> g_backend{Backend::auto_detect};

Backend resolve(Backend b) {
    if (b != Backend::auto_detect) return b;
    if (avx2_available()) return Backend::avx2;
    if (neon_available()) return Backend::neon;
    return Backend::scalar;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

bool neon_available() {
#if defined(__aarch64__)
    return true;
#else
    return false;
#endif
}

void set_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_available())
        throw std::invalid_argument("kernel backend avx2 not available on this CPU");
    if (b == Backend::neon && !neon_available())
        throw std::invalid_argument("kernel backend neon not available on this CPU");
    g_backend.store(b, std::memory_order_relaxed);
}

Backend active_backend() { return resolve(g_backend.load(std::memory_order_relaxed)); }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::auto_detect: return "auto";
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

double weighted_sum_scalar(const int8_t* chi, const double* w, std::size_t n) {
    double lanes[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    detail::accumulate_tail(lanes, chi, w, 0, n);
    return detail::reduce8(lanes);
}

int64_t i8_sum_scalar(const int8_t* v, std::size_t n) {
    int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += v[i];
    return total;
}

double weighted_sum(const int8_t* chi, const double* w, std::size_t n) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(__i386__)
        case Backend::avx2: return weighted_sum_avx2(chi, w, n);
#endif
#if defined(__aarch64__)
        case Backend::neon: return weighted_sum_neon(chi, w, n);
#endif
        default: break;
    }
    return weighted_sum_scalar(chi, w, n);
}

int64_t i8_sum(const int8_t* v, std::size_t n) {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(__i386__)
        case Backend::avx2: return i8_sum_avx2(v, n);
#endif
#if defined(__aarch64__)
        case Backend::neon: return i8_sum_neon(v, n);
#endif
        default: break;
    }
    return i8_sum_scalar(v, n);
}

}  // namespace qcs::kernels
