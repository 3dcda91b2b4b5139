#include "qcs/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

#include "qcs/char_sums.hpp"
#include "qcs/char_table.hpp"
#include "qcs/errors.hpp"
#include "qcs/kernels.hpp"
#include "qcs/parallel.hpp"
#include "qcs/polya.hpp"

namespace qcs {

namespace {

double default_lambda(double y) {
    double l = std::log(y);
    if (!(l > 1.0)) return 0.0;  // log log y undefined or nonpositive
    return std::sqrt(l * std::log(l));
}

constexpr size_t kSupportCap = 4'000'000;

void enumerate_support(const std::vector<int64_t>& primes, const std::vector<double>& rp,
                       double y, size_t idx, int64_t n, double r,
                       std::vector<std::pair<int64_t, double>>& out) {
    if (out.size() > kSupportCap)
        throw DataError("build_resonator: support exceeds " + std::to_string(kSupportCap) +
                        " entries");
    out.emplace_back(n, r);
    for (size_t j = idx; j < primes.size(); ++j) {
        if (double(n) * double(primes[j]) > y) break;  // primes ascending
        enumerate_support(primes, rp, y, j + 1, n * primes[j], r * rp[j], out);
    }
}

}  // namespace

double ResonatorSpec::coefficient(int64_t n) const {
    auto it = std::lower_bound(coefficients.begin(), coefficients.end(), n,
                               [](const auto& e, int64_t v) { return e.first < v; });
    return (it != coefficients.end() && it->first == n) ? it->second : 0.0;
}

double ResonatorSpec::prime_coefficient(int64_t p) const {
    return std::binary_search(window_primes.begin(), window_primes.end(), p)
               ? lambda / (std::sqrt(double(p)) * std::log(double(p)))
               : 0.0;
}

double ResonatorSpec::sum_r() const {
    double s = 0;
    for (const auto& [n, r] : coefficients) s += r;
    return s;
}

double ResonatorSpec::sum_r_sq() const {
    double s = 0;
    for (const auto& [n, r] : coefficients) s += r * r;
    return s;
}

double ResonatorSpec::normalizer() const {
    double prod = 1.0;
    for (int64_t p : window_primes) {
        double r = lambda / (std::sqrt(double(p)) * std::log(double(p)));
        prod *= 1.0 + r * r;
    }
    return prod;
}

ResonatorSpec build_resonator(double y, double delta, const ResonatorOverrides& o) {
    if (!(y >= 1)) throw std::invalid_argument("build_resonator: y must be >= 1");
    const bool has_overrides = o.window_lo || o.window_hi || o.lambda;
    if (!has_overrides && !(delta > 0 && delta < 0.25))
        throw std::invalid_argument("build_resonator: delta must lie in (0, 1/4)");

    ResonatorSpec spec;
    spec.y = y;
    spec.delta = delta;
    spec.lambda = o.lambda ? *o.lambda : default_lambda(y);
    spec.window_lo = o.window_lo ? *o.window_lo : spec.lambda * spec.lambda;
    spec.window_hi = o.window_hi
                         ? *o.window_hi
                         : (spec.lambda > 0
                                ? std::exp(std::pow(std::log(spec.lambda), 2.0))
                                : 0.0);

    double hi = std::min(spec.window_hi, y);
    if (hi >= 2.0 && spec.window_lo <= hi) {
        if (hi > 5e7)
            throw std::invalid_argument("build_resonator: prime window exceeds 5e7");
        auto table = PrimeTable::up_to(int64_t(std::floor(hi)));
        for (int64_t p : table.primes)
            if (double(p) >= spec.window_lo) spec.window_primes.push_back(p);
    }
    spec.window_empty = spec.window_primes.empty();

    std::vector<double> rp(spec.window_primes.size());
    for (size_t i = 0; i < rp.size(); ++i) {
        double p = double(spec.window_primes[i]);
        rp[i] = spec.lambda / (std::sqrt(p) * std::log(p));
    }
    enumerate_support(spec.window_primes, rp, y, 0, 1, 1.0, spec.coefficients);
    std::sort(spec.coefficients.begin(), spec.coefficients.end());
    return spec;
}

DerivedResonatorParams derive_resonator_params(int64_t X, double x, double delta) {
    if (X < 3) throw std::invalid_argument("derive_resonator_params: X must be >= 3");
    if (!(x >= 1)) throw std::invalid_argument("derive_resonator_params: x must be >= 1");
    if (!(delta > 0 && delta < 0.25))
        throw std::invalid_argument("derive_resonator_params: delta must lie in (0, 1/4)");
    DerivedResonatorParams p;
    p.z = choose_z(double(2 * X), x);
    p.y_raw = std::pow(double(X), 0.5 - delta) / std::pow(2.0 * std::log(p.z), 2.0);
    p.y = std::max(1.0, p.y_raw);
    p.lambda = default_lambda(p.y);
    return p;
}

double resonator_value(const ResonatorSpec& spec, const FundamentalDiscriminant& d) {
    double sum = 0.0;
    for (const auto& [n, r] : spec.coefficients) sum += r * double(d.chi(n));
    return sum;
}

namespace {

struct WindowEval {
    std::vector<int64_t> ds;
    std::vector<double> r_sq;
    std::vector<double> cd_sq;
    double z_fixed = 0;
};

WindowEval evaluate_window(const ResonatorSpec& spec, int64_t X, double x, unsigned threads,
                           bool per_d_z, bool need_cd,
                           std::optional<std::pair<int64_t, int64_t>> abs_range) {
    WindowEval ev;
    int64_t lo = X, hi = 2 * X;
    if (abs_range) {
        lo = abs_range->first;
        hi = abs_range->second;
    }
    ev.ds = fundamental_abs_window(lo, hi);
    if (ev.ds.empty())
        throw DataError("moment window (" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "] contains no fundamental discriminant");
    ev.r_sq.resize(ev.ds.size());
    ev.cd_sq.assign(ev.ds.size(), 0.0);

    TrigWeights weights;
    std::vector<int32_t> spf;
    int64_t m_top = 0;
    if (need_cd) {
        ev.z_fixed = choose_z(double(2 * X), x);
        m_top = int64_t(std::floor(ev.z_fixed));
        weights = make_trig_weights(m_top, 1.0 / x);
        spf = smallest_prime_factor_table(hi);
    }

    parallel_for_index(int64_t(ev.ds.size()), threads, [&](int64_t i) {
        auto d = FundamentalDiscriminant::trusted(ev.ds[size_t(i)]);
        double r = resonator_value(spec, d);
        ev.r_sq[size_t(i)] = r * r;
        if (!need_cd) return;
        if (d.value() > 0) return;  // C_d vanishes for the even character
        double z_d = per_d_z ? choose_z(double(d.conductor()), x) : ev.z_fixed;
        int64_t m_max = std::min(int64_t(std::floor(z_d)), m_top);
        CharTable tab(d, spf);
        std::vector<int8_t> row(size_t(m_max));
        tab.fill_row(row.data(), m_max);
        double c = 2.0 * kernels::weighted_sum(row.data(), weights.cos_kernel.data(),
                                               size_t(m_max));
        ev.cd_sq[size_t(i)] = c * c;
    });
    return ev;
}

double moment1_main_product(const ResonatorSpec& spec, int64_t X) {
    // diagonal mn = square with squarefree support collapses to m = n
    double sum = 0.0;
    for (const auto& [m, r] : spec.coefficients) {
        double prod = 1.0;
        for (int64_t p : spec.window_primes)
            if (m % p == 0) prod *= double(p) / double(p + 1);
        sum += r * r * prod;
    }
    return double(X) / zeta2 * sum;
}

double moment2_main_diagonal(const ResonatorSpec& spec, int64_t X, double x, double z) {
    // restricted diagonal mk = nl: k = n1 g, l = m1 g with m1 = m/(m,n),
    // n1 = n/(m,n); weights a_k = (1 - cos(2 pi k / x)) / k, 1 <= k, l <= z.
    const int64_t m_top = int64_t(std::floor(z));
    if (m_top < 1) return 0.0;
    auto weights = make_trig_weights(m_top, 1.0 / x);
    const auto& a = weights.cos_kernel;
    auto spf = smallest_prime_factor_table(m_top);

    double total = 0.0;
    for (const auto& [m, rm] : spec.coefficients) {
        for (const auto& [n, rn] : spec.coefficients) {
            int64_t h = std::gcd(m, n);
            int64_t m1 = m / h, n1 = n / h;
            int64_t mx = std::max(m1, n1);
            int64_t gmax = m_top / mx;  // k = n1 g and l = m1 g both stay <= floor(z)
            if (gmax < 1) continue;

            double base = 1.0;
            for (int64_t p : spec.window_primes)
                if (m % p == 0 || n % p == 0) base *= double(p) / double(p + 1);

            double pair_sum = 0.0;
            for (int64_t g = 1; g <= gmax; ++g) {
                double extra = 1.0;
                int64_t rest = g;
                while (rest > 1) {
                    int64_t p = spf[size_t(rest)];
                    if (m % p != 0 && n % p != 0) extra *= double(p) / double(p + 1);
                    while (rest % p == 0) rest /= p;
                }
                pair_sum += a[size_t(n1 * g - 1)] * a[size_t(m1 * g - 1)] * extra;
            }
            total += rm * rn * base * pair_sum;
        }
    }
    return 2.0 * double(X) / zeta2 * total;
}

}  // namespace

std::pair<double, double> moment1(const ResonatorSpec& spec, int64_t X, unsigned threads) {
    auto ev = evaluate_window(spec, X, 1.0, threads, false, false, {});
    double exact = 0.0;
    for (double v : ev.r_sq) exact += v;
    return {exact, moment1_main_product(spec, X)};
}

std::pair<double, double> moment2(const ResonatorSpec& spec, int64_t X, double x,
                                  unsigned threads, bool per_d_z) {
    auto ev = evaluate_window(spec, X, x, threads, per_d_z, true, {});
    double exact = 0.0;
    for (size_t i = 0; i < ev.ds.size(); ++i) exact += ev.r_sq[i] * ev.cd_sq[i];
    return {exact, moment2_main_diagonal(spec, X, x, ev.z_fixed)};
}

MomentReport ratio_bound(const ResonatorSpec& spec, int64_t X, double x, unsigned threads,
                         bool per_d_z, std::optional<std::pair<int64_t, int64_t>> abs_range) {
    if (!(x >= 1)) throw std::invalid_argument("ratio_bound: x must be >= 1");
    auto ev = evaluate_window(spec, X, x, threads, per_d_z, true, abs_range);

    MomentReport rep;
    rep.X = X;
    rep.x = x;
    rep.m1_exact = 0.0;
    rep.m2_exact = 0.0;
    rep.max_cd_sq = 0.0;
    for (size_t i = 0; i < ev.ds.size(); ++i) {
        rep.m1_exact += ev.r_sq[i];
        rep.m2_exact += ev.r_sq[i] * ev.cd_sq[i];
        if (ev.cd_sq[i] > rep.max_cd_sq) rep.max_cd_sq = ev.cd_sq[i];
    }
    rep.m1_main = moment1_main_product(spec, X);
    rep.m1_main_plain = double(X) / zeta2 * spec.sum_r_sq();
    rep.m2_main = moment2_main_diagonal(spec, X, x, ev.z_fixed);
    rep.ratio = rep.m2_exact / rep.m1_exact;
    char buf[96];
    if (per_d_z)
        std::snprintf(buf, sizeof buf, "per-d sqrt(|d|x)log|d|; cap=%.6f", ev.z_fixed);
    else
        std::snprintf(buf, sizeof buf, "fixed sqrt(2Xx)log(2X)=%.6f", ev.z_fixed);
    rep.z_rule = buf;
    return rep;
}

RmrnReport rmrn_lhs(const ResonatorSpec& spec, double Y, double W) {
    if (!(W >= 1)) throw std::invalid_argument("rmrn_lhs: W must be >= 1");
    if (W > Y) throw std::invalid_argument("rmrn_lhs: requires W <= Y");

    double total = 0.0;
    for (const auto& [m1, rm] : spec.coefficients) {
        if (double(m1) > W) break;
        for (const auto& [n1, rn] : spec.coefficients) {
            if (double(n1) > W) break;
            if (std::gcd(m1, n1) != 1) continue;
            int64_t mx = std::max(m1, n1);
            double outer = double(m1) * double(n1) * rm * rn /
                           (double(mx) * double(mx) * double(mx));
            double inner = 0.0;
            int64_t m1n1 = m1 * n1;
            for (const auto& [e, re] : spec.coefficients) {
                if (double(e) * double(mx) > Y) break;
                if (std::gcd(e, m1n1) != 1) continue;
                inner += re * re;
            }
            total += outer * inner;
        }
    }

    RmrnReport rep;
    rep.Y = Y;
    rep.W = W;
    rep.lhs = total / spec.normalizer();
    double l = std::log(Y);
    rep.rhs = l > 1.0 ? std::exp(2.0 * std::sqrt(l / std::log(l)))
                      : std::numeric_limits<double>::quiet_NaN();
    rep.window_empty = spec.window_empty;
    return rep;
}

double predicted_lower_bound(double X, double x) {
    if (!(X > std::numbers::e))
        throw std::invalid_argument("predicted_lower_bound: X must exceed e");
    if (!(x >= 1)) throw std::invalid_argument("predicted_lower_bound: x must be >= 1");
    double l = std::log(X);
    return std::sqrt(X / x) * std::exp(std::numbers::sqrt2 / 2.0 * std::sqrt(l / std::log(l)));
}

}  // namespace qcs
