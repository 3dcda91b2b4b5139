#pragma once

#include <cstdint>
#include <span>

namespace qcs {

/// sum over fundamental |d| <= X of chi_d(n), exact; segmented squarefree
/// sieve over the discriminant magnitudes, blocks reduced as exact integers.
int64_t discriminant_char_average(int64_t X, int64_t n, unsigned threads = 0);

/// Number of fundamental discriminants with |d| <= X (the n = 1 case).
int64_t count_fundamental(int64_t X, unsigned threads = 0);

/// (X / zeta(2)) prod_{p|n} p/(p+1) when n is a perfect square, else 0.
double main_term(int64_t X, int64_t n);

struct ErrorFactors {
    double f;         // exp((log n0)^{1-eps})
    double g;         // sum_{d | n1} mu(d)^2 / d^{1/2+eps}
    double f_coarse;  // exp(P(n)^{1-eps}),   P = largest prime factor
    double g_coarse;  // exp(P(n)^{1/2-eps})
};
ErrorFactors error_factors(int64_t n, double epsilon);

/// Least-squares slope of log|err| against log X; throws DataError when
/// fewer than 3 points survive or the abscissas are degenerate.
double fit_loglog_slope(std::span<const double> X, std::span<const double> err);

/// Slope of log|exact - main| over the given X values; zero errors dropped.
double error_exponent_fit(int64_t n, std::span<const int64_t> X_values, unsigned threads = 0);

struct AverageReport {
    int64_t X;
    int64_t n;
    int64_t exact;
    double main;
    double error;  // |exact - main|
    double f_n0;
    double g_n1;
    double epsilon;
};
AverageReport average_report(int64_t X, int64_t n, double epsilon = 0.1, unsigned threads = 0);

}  // namespace qcs
