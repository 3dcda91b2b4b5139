#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcs/arith.hpp"

namespace qcs {

constexpr double zeta2 = 1.6449340668482264;  // pi^2 / 6

struct ResonatorOverrides {
    std::optional<double> window_lo;
    std::optional<double> window_hi;
    std::optional<double> lambda;
};

/// Multiplicative coefficient table r(.) supported on squarefree products of
/// the prime window, restricted to n <= y:
///   r(p) = lambda / (sqrt(p) log p) for window_lo <= p <= window_hi, else 0,
/// with the defaults lambda = sqrt(log y log log y), window = [lambda^2,
/// exp((log lambda)^2)].  The window is intersected with [2, y], since no
/// larger prime can appear in the support.
struct ResonatorSpec {
    double y = 1;
    double lambda = 0;
    double window_lo = 0;
    double window_hi = 0;
    double delta = 0;
    bool window_empty = true;  // no usable window primes: support is {1}
    std::vector<int64_t> window_primes;
    std::vector<std::pair<int64_t, double>> coefficients;  // ascending n, r(n)

    double coefficient(int64_t n) const;        // 0 off support
    double prime_coefficient(int64_t p) const;  // r(p)
    double sum_r() const;
    double sum_r_sq() const;
    double normalizer() const;  // prod over window primes of (1 + r(p)^2)
};

/// Rejects y < 1, and delta outside (0, 1/4) unless overrides are given.
ResonatorSpec build_resonator(double y, double delta, const ResonatorOverrides& o = {});

/// The derived parameter rule y = X^{1/2-delta} / (2 log z)^2 with
/// z = choose_z(2X, x).  At desk scale the raw value sits below 1, so y is
/// clamped to 1 and the resulting resonator degenerates to support {1};
/// callers should surface window_empty instead of silently using R == 1.
struct DerivedResonatorParams {
    double y_raw;
    double y;  // max(y_raw, 1)
    double z;
    double lambda;
};
DerivedResonatorParams derive_resonator_params(int64_t X, double x, double delta);

/// R(d) = sum_{n <= y} r(n) chi_d(n) over the coefficient table.
double resonator_value(const ResonatorSpec& spec, const FundamentalDiscriminant& d);

struct MomentReport {
    int64_t X;
    double x;
    double m1_exact;       // sum over X < |d| <= 2X of R(d)^2
    double m1_main;        // (X/zeta(2)) sum_m r(m)^2 prod_{p|m} p/(p+1)
    double m1_main_plain;  // (X/zeta(2)) sum_m r(m)^2
    double m2_exact;       // sum of R(d)^2 C_d(z)^2
    double m2_main;        // restricted-diagonal main term (mk = nl pairs)
    double ratio;          // m2_exact / m1_exact
    double max_cd_sq;      // max over the window of C_d(z)^2
    std::string z_rule;
};

std::pair<double, double> moment1(const ResonatorSpec& spec, int64_t X, unsigned threads = 0);
std::pair<double, double> moment2(const ResonatorSpec& spec, int64_t X, double x,
                                  unsigned threads = 0, bool per_d_z = false);

/// Window inequality max C_d(z)^2 >= M2/M1 with both sides evaluated
/// independently.  abs_range overrides the (X, 2X] window when present.
MomentReport ratio_bound(const ResonatorSpec& spec, int64_t X, double x, unsigned threads = 0,
                         bool per_d_z = false,
                         std::optional<std::pair<int64_t, int64_t>> abs_range = {});

struct RmrnReport {
    double Y;
    double W;
    double lhs;
    double rhs;  // exp(2 sqrt(log Y / log log Y)), comparison value only
    bool window_empty;
};

/// Exact evaluation of the coprime coefficient double sum
///   sum_{m1,n1 <= W, (m1,n1)=1} m1 n1 r(m1) r(n1) / max{m1,n1}^3
///     * sum_{e <= Y/max{m1,n1}, (e, m1 n1)=1} r(e)^2  / prod_p (1 + r(p)^2).
RmrnReport rmrn_lhs(const ResonatorSpec& spec, double Y, double W);

/// sqrt(X/x) exp((sqrt(2)/2) sqrt(log X / log log X)); the closed-form
/// reference line with the o(1) term dropped.  Rejects X <= e.
double predicted_lower_bound(double X, double x);

}  // namespace qcs
