#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcs/arith.hpp"
#include "qcs/char_table.hpp"

namespace qcs {

/// tau(chi_d) = sum_{n <= q} chi_d(n) e(n/q), q = |d|, by direct summation.
/// For real primitive chi_d this comes out as sqrt(d) for d > 0 and
/// i sqrt(|d|) for d < 0; the tests verify that rather than assume it.
std::complex<double> gauss_sum(const FundamentalDiscriminant& d);
std::complex<double> gauss_sum(const CharTable& table);

/// Truncation height sqrt(|d| x) log |d|; requires |d| >= 3, x >= 1.
double choose_z(double abs_d, double x);

/// Kernel weights for the truncated expansion, indexed by m - 1:
///   cos_kernel[m-1] = (1 - cos(2 pi m alpha)) / m
///   sin_kernel[m-1] = sin(2 pi m alpha) / m
struct TrigWeights {
    std::vector<double> cos_kernel;
    std::vector<double> sin_kernel;
    double alpha = 0;
};
TrigWeights make_trig_weights(int64_t m_max, double alpha);

struct PolyaParams {
    FundamentalDiscriminant d;
    double alpha;   // prefix fraction in (0, 1)
    double z;       // truncation height, >= 1
    double x = 0;   // cut parameter (informational; batch drivers set alpha = 1/x)
};

struct PolyaReport {
    int64_t exact;                // sum_{n <= alpha |d|} chi_d(n)
    std::complex<double> approx;  // truncated expansion value
    double abs_error;             // |exact - approx|
    double error_budget;          // 1 + |d| log|d| / z
    double z_used;
};

/// Truncated Fourier expansion of the prefix sum,
///   (tau(chi)/2 pi i) sum_{1<=|m|<=z} (chi(m)/m)(1 - e(-alpha m)),
/// with the +-m pairs combined analytically before accumulation, so the
/// parity cancellations are structural rather than numerical.
PolyaReport polya_truncated(const PolyaParams& p);

/// C_d(z) = sum_{1<=|m|<=z} (chi_d(m)/m)(1 - cos(2 pi m / x)).
/// Identically zero for d > 0 (even character).
double cosine_sum(const FundamentalDiscriminant& d, double z, double x);

/// S_d(z) = sum_{1<=|m|<=z} (chi_d(m)/m) sin(2 pi m / x).
/// Identically zero for d < 0 (odd character).
double sine_sum(const FundamentalDiscriminant& d, double z, double x);

struct ReconstructReport {
    int64_t d;
    double x;
    double z;        // choose_z(|d|, x)
    double bound;    // (sqrt|d| / 2 pi) |C_d(z)|
    int64_t exact;   // target_sum(d, x)
    double residual; // |exact| - bound
};

/// Reconstruction of |sum_{n <= |d|/x} chi_d(n)| from the cosine sum; only
/// the odd side (d < 0) carries the identity.
ReconstructReport reconstruct_bound(const FundamentalDiscriminant& d, double x);

struct PolyaRow {
    int64_t d;
    double x;
    double alpha;
    PolyaReport rep;
};

struct PolyaBatchOptions {
    unsigned threads = 0;
    std::optional<double> z_override;
    std::optional<double> alpha_override;
    std::optional<std::size_t> sample;  // deterministic subsample of the window
    uint64_t seed = 0;
};

/// One report per fundamental d with X < |d| <= 2X (canonical order).
std::vector<PolyaRow> polya_window_batch(int64_t X, double x, const PolyaBatchOptions& opt = {});

}  // namespace qcs
