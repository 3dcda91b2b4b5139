#include "qcs/disc_average.hpp"

#include <cmath>
#include <vector>

#include "qcs/arith.hpp"
#include "qcs/errors.hpp"
#include "qcs/parallel.hpp"
#include "qcs/resonance.hpp"

namespace qcs {

namespace {

constexpr int64_t kBlock = 1'000'000;

// Every fundamental d decomposes as +-m or +-4m with m squarefree:
//   m == 1 (4): d = +m (m > 1)  and d = -4m
//   m == 2 (4): d = +4m         and d = -4m
//   m == 3 (4): d = -m          and d = +4m
// Each d with |d| <= X is produced exactly once from m <= X.
template <class F>
int64_t sum_block(int64_t lo, int64_t hi, int64_t X, const std::vector<int64_t>& primes,
                  F&& chi_at) {
    // squarefree flags for magnitudes in [lo, hi)
    std::vector<uint8_t> sqf(size_t(hi - lo), 1);
    for (int64_t p : primes) {
        int64_t pp = p * p;
        if (pp >= hi) break;
        int64_t start = ((lo + pp - 1) / pp) * pp;
        for (int64_t j = start; j < hi; j += pp) sqf[size_t(j - lo)] = 0;
    }
    int64_t sum = 0;
    for (int64_t m = lo; m < hi; ++m) {
        if (!sqf[size_t(m - lo)]) continue;
        switch (m & 3) {
            case 1:
                if (m > 1) sum += chi_at(m);
                if (4 * m <= X) sum += chi_at(-4 * m);
                break;
            case 2:
                if (4 * m <= X) sum += chi_at(4 * m) + chi_at(-4 * m);
                break;
            case 3:
                sum += chi_at(-m);
                if (4 * m <= X) sum += chi_at(4 * m);
                break;
            default:
                break;  // m == 0 (4) is never squarefree
        }
    }
    return sum;
}

}  // namespace

int64_t discriminant_char_average(int64_t X, int64_t n, unsigned threads) {
    if (X < 3) throw std::invalid_argument("discriminant_char_average: X must be >= 3");
    if (n < 1) throw std::invalid_argument("discriminant_char_average: n must be >= 1");

    auto primes = PrimeTable::up_to(int64_t(std::sqrt(double(X))) + 2).primes;
    int64_t nblocks = (X + kBlock - 1) / kBlock;
    std::vector<int64_t> partial(size_t(nblocks), 0);
    parallel_for_index(nblocks, threads, [&](int64_t b) {
        int64_t lo = std::max<int64_t>(1, b * kBlock);
        int64_t hi = std::min(X + 1, (b + 1) * kBlock);
        if (lo >= hi) return;
        partial[size_t(b)] =
            sum_block(lo, hi, X, primes, [n](int64_t d) { return int64_t(kronecker(d, n)); });
    });
    int64_t total = 0;
    for (int64_t v : partial) total += v;
    return total;
}

int64_t count_fundamental(int64_t X, unsigned threads) {
    return discriminant_char_average(X, 1, threads);
}

double main_term(int64_t X, int64_t n) {
    if (X < 1 || n < 1) throw std::invalid_argument("main_term: X and n must be >= 1");
    int64_t root = int64_t(std::llround(std::sqrt(double(n))));
    bool is_square = false;
    for (int64_t r = std::max<int64_t>(root - 1, 0); r <= root + 1; ++r)
        if (r * r == n) is_square = true;
    if (!is_square) return 0.0;
    double prod = 1.0;
    for (const auto& [p, e] : factorize(n)) prod *= double(p) / double(p + 1);
    return double(X) / zeta2 * prod;
}

ErrorFactors error_factors(int64_t n, double epsilon) {
    if (n < 1) throw std::invalid_argument("error_factors: n must be >= 1");
    if (!(epsilon > 0 && epsilon < 0.5))
        throw std::invalid_argument("error_factors: epsilon must lie in (0, 1/2)");
    auto dec = squarefree_decompose(n);
    ErrorFactors ef;
    ef.f = std::exp(std::pow(std::log(double(dec.n0)), 1.0 - epsilon));
    // g is multiplicative over the distinct primes of n1
    ef.g = 1.0;
    for (const auto& [p, e] : factorize(dec.n1))
        ef.g *= 1.0 + std::pow(double(p), -(0.5 + epsilon));
    if (n >= 2) {
        double P = double(largest_prime_factor(n));
        ef.f_coarse = std::exp(std::pow(P, 1.0 - epsilon));
        ef.g_coarse = std::exp(std::pow(P, 0.5 - epsilon));
    } else {
        ef.f_coarse = 1.0;
        ef.g_coarse = 1.0;
    }
    return ef;
}

double fit_loglog_slope(std::span<const double> X, std::span<const double> err) {
    if (X.size() != err.size()) throw std::invalid_argument("fit_loglog_slope: size mismatch");
    if (X.size() < 3) throw DataError("fit_loglog_slope: fewer than 3 points");
    double su = 0, sv = 0;
    size_t n = X.size();
    std::vector<double> u(n), v(n);
    for (size_t i = 0; i < n; ++i) {
        u[i] = std::log(X[i]);
        v[i] = std::log(std::fabs(err[i]));
        su += u[i];
        sv += v[i];
    }
    double ubar = su / double(n), vbar = sv / double(n);
    double num = 0, den = 0;
    for (size_t i = 0; i < n; ++i) {
        num += (u[i] - ubar) * (v[i] - vbar);
        den += (u[i] - ubar) * (u[i] - ubar);
    }
    if (den == 0) throw DataError("fit_loglog_slope: degenerate abscissas");
    return num / den;
}

double error_exponent_fit(int64_t n, std::span<const int64_t> X_values, unsigned threads) {
    std::vector<double> xs, errs;
    for (int64_t X : X_values) {
        int64_t exact = discriminant_char_average(X, n, threads);
        double err = double(exact) - main_term(X, n);
        if (err == 0.0) continue;  // dropped: log|0| undefined
        xs.push_back(double(X));
        errs.push_back(err);
    }
    if (xs.size() < 3)
        throw DataError("error_exponent_fit: fewer than 3 nonzero errors survive");
    return fit_loglog_slope(xs, errs);
}

AverageReport average_report(int64_t X, int64_t n, double epsilon, unsigned threads) {
    AverageReport rep;
    rep.X = X;
    rep.n = n;
    rep.exact = discriminant_char_average(X, n, threads);
    rep.main = main_term(X, n);
    rep.error = std::fabs(double(rep.exact) - rep.main);
    auto ef = error_factors(n, epsilon);
    rep.f_n0 = ef.f;
    rep.g_n1 = ef.g;
    rep.epsilon = epsilon;
    return rep;
}

}  // namespace qcs
