#include "qcs/polya.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qcs/char_sums.hpp"
#include "qcs/errors.hpp"
#include "qcs/kernels.hpp"
#include "qcs/parallel.hpp"

namespace qcs {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// chi(1..count) cyclically, as a kernel-ready row.
std::vector<int8_t> chi_row(const CharTable& tab, int64_t count) {
    std::vector<int8_t> row(size_t(std::max<int64_t>(count, 0)));
    if (count > 0) tab.fill_row(row.data(), count);
    return row;
}

}  // namespace

std::complex<double> gauss_sum(const CharTable& table) {
    const int64_t q = table.conductor();
    const double theta = two_pi / double(q);
    const std::complex<double> step(std::cos(theta), std::sin(theta));
    std::complex<double> cur(1.0, 0.0);  // e(n/q) at n = 0
    std::complex<double> sum(0.0, 0.0);
    const auto& vals = table.values();
    for (int64_t n = 1; n <= q; ++n) {
        if ((n & 1023) == 0) {  // re-sync the rotation against phase drift
            double a = theta * double(n);
            cur = {std::cos(a), std::sin(a)};
        } else {
            cur *= step;
        }
        int v = vals[size_t(n % q)];
        if (v) sum += double(v) * cur;
    }
    return sum;
}

std::complex<double> gauss_sum(const FundamentalDiscriminant& d) {
    return gauss_sum(CharTable(d));
}

double choose_z(double abs_d, double x) {
    if (!(abs_d >= 3)) throw std::invalid_argument("choose_z: |d| must be >= 3");
    if (!(x >= 1)) throw std::invalid_argument("choose_z: x must be >= 1");
    return std::sqrt(abs_d * x) * std::log(abs_d);
}

TrigWeights make_trig_weights(int64_t m_max, double alpha) {
    TrigWeights w;
    w.alpha = alpha;
    w.cos_kernel.resize(size_t(std::max<int64_t>(m_max, 0)));
    w.sin_kernel.resize(size_t(std::max<int64_t>(m_max, 0)));
    for (int64_t m = 1; m <= m_max; ++m) {
        double a = two_pi * alpha * double(m);
        w.cos_kernel[size_t(m - 1)] = (1.0 - std::cos(a)) / double(m);
        w.sin_kernel[size_t(m - 1)] = std::sin(a) / double(m);
    }
    return w;
}

namespace {

PolyaReport polya_truncated_core(const CharTable& tab, std::complex<double> tau, double alpha,
                                 double z, const TrigWeights& w,
                                 const std::vector<int8_t>& row) {
    const int64_t q = tab.conductor();
    const int64_t m_max = int64_t(row.size());  // = floor(z), capped by the caller
    const int64_t t = floor_mul(q, alpha);

    PolyaReport rep;
    rep.exact = tab.prefix_sum(std::min(t, q));
    // +-m pairs combined: even d leaves 2i * sum chi(m) sin(2 pi alpha m)/m,
    // odd d leaves 2 * sum chi(m)(1 - cos(2 pi alpha m))/m.
    std::complex<double> pair_sum;
    if (tab.discriminant() > 0) {
        double s = kernels::weighted_sum(row.data(), w.sin_kernel.data(), size_t(m_max));
        pair_sum = {0.0, 2.0 * s};
    } else {
        double c = kernels::weighted_sum(row.data(), w.cos_kernel.data(), size_t(m_max));
        pair_sum = {2.0 * c, 0.0};
    }
    // divide by 2 pi i, i.e. multiply by -i / (2 pi)
    rep.approx = tau * pair_sum * std::complex<double>(0.0, -1.0) / two_pi;
    rep.abs_error = std::abs(std::complex<double>(double(rep.exact), 0.0) - rep.approx);
    rep.error_budget = 1.0 + double(q) * std::log(double(q)) / z;
    rep.z_used = z;
    return rep;
}

}  // namespace

PolyaReport polya_truncated(const PolyaParams& p) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0))
        throw std::invalid_argument("polya_truncated: alpha must be in (0, 1)");
    if (!(p.z >= 1.0)) throw std::invalid_argument("polya_truncated: z must be >= 1");
    CharTable tab(p.d);
    const int64_t m_max = int64_t(std::floor(p.z));
    auto row = chi_row(tab, m_max);
    auto w = make_trig_weights(m_max, p.alpha);
    return polya_truncated_core(tab, gauss_sum(tab), p.alpha, p.z, w, row);
}

double cosine_sum(const FundamentalDiscriminant& d, double z, double x) {
    if (!(z >= 1)) throw std::invalid_argument("cosine_sum: z must be >= 1");
    if (!(x >= 1)) throw std::invalid_argument("cosine_sum: x must be >= 1");
    if (d.value() > 0) return 0.0;  // m and -m cancel for the even character
    CharTable tab(d);
    const int64_t m_max = int64_t(std::floor(z));
    auto row = chi_row(tab, m_max);
    auto w = make_trig_weights(m_max, 1.0 / x);
    return 2.0 * kernels::weighted_sum(row.data(), w.cos_kernel.data(), size_t(m_max));
}

double sine_sum(const FundamentalDiscriminant& d, double z, double x) {
    if (!(z >= 1)) throw std::invalid_argument("sine_sum: z must be >= 1");
    if (!(x >= 1)) throw std::invalid_argument("sine_sum: x must be >= 1");
    if (d.value() < 0) return 0.0;  // m and -m cancel for the odd character
    CharTable tab(d);
    const int64_t m_max = int64_t(std::floor(z));
    auto row = chi_row(tab, m_max);
    auto w = make_trig_weights(m_max, 1.0 / x);
    return 2.0 * kernels::weighted_sum(row.data(), w.sin_kernel.data(), size_t(m_max));
}

ReconstructReport reconstruct_bound(const FundamentalDiscriminant& d, double x) {
    if (d.value() > 0)
        throw std::invalid_argument("reconstruct_bound: requires d < 0 (odd character)");
    if (!(x >= 1)) throw std::invalid_argument("reconstruct_bound: x must be >= 1");
    ReconstructReport r;
    r.d = d.value();
    r.x = x;
    r.z = choose_z(double(d.conductor()), x);
    r.bound = std::sqrt(double(d.conductor())) / two_pi * std::abs(cosine_sum(d, r.z, x));
    r.exact = target_sum(d, x);
    r.residual = double(std::llabs(r.exact)) - r.bound;
    return r;
}

std::vector<PolyaRow> polya_window_batch(int64_t X, double x, const PolyaBatchOptions& opt) {
    if (X < 3) throw std::invalid_argument("polya_window_batch: X must be >= 3");
    if (!(x >= 1)) throw std::invalid_argument("polya_window_batch: x must be >= 1");
    auto ds = fundamental_abs_window(X, 2 * X);
    if (ds.empty())
        throw DataError("polya_window_batch: empty discriminant window (X=" + std::to_string(X) +
                        ")");
    if (opt.sample && *opt.sample < ds.size()) {
        std::mt19937_64 rng(opt.seed);
        std::vector<int64_t> picked;
        std::sample(ds.begin(), ds.end(), std::back_inserter(picked), *opt.sample, rng);
        ds = std::move(picked);  // std::sample preserves the canonical order
    }

    const double alpha = opt.alpha_override.value_or(1.0 / x);
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("polya_window_batch: alpha must be in (0, 1)");
    const double z_top = opt.z_override.value_or(choose_z(double(2 * X), x));
    if (!(z_top >= 1)) throw std::invalid_argument("polya_window_batch: z must be >= 1");
    const int64_t m_top = int64_t(std::floor(z_top));

    auto spf = smallest_prime_factor_table(2 * X);
    auto weights = make_trig_weights(m_top, alpha);

    std::vector<PolyaRow> rows(ds.size());
    parallel_for_index(int64_t(ds.size()), opt.threads, [&](int64_t i) {
        auto d = FundamentalDiscriminant::trusted(ds[size_t(i)]);
        CharTable tab(d, spf);
        double z = opt.z_override ? *opt.z_override : choose_z(double(d.conductor()), x);
        int64_t m_max = std::min(int64_t(std::floor(z)), m_top);
        auto row = chi_row(tab, m_max);
        rows[size_t(i)] = {d.value(), x, alpha,
                           polya_truncated_core(tab, gauss_sum(tab), alpha, z, weights, row)};
    });
    return rows;
}

}  // namespace qcs
