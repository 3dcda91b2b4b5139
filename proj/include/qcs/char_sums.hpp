#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "qcs/arith.hpp"

namespace qcs {

/// floor(q / x) for real x >= 1, robust at integer boundaries.
int64_t floor_div(int64_t q, double x);
/// floor(a * q) for real a in [0, 1], robust at integer boundaries.
int64_t floor_mul(int64_t q, double a);

/// sum_{1 <= n <= t} chi_d(n), exact; reduces t mod |d| first when t > |d|.
int64_t char_prefix_sum(const FundamentalDiscriminant& d, int64_t t);

/// char_prefix_sum(d, floor(|d| / x)); rejects x < 1.
int64_t target_sum(const FundamentalDiscriminant& d, double x);

struct SearchWindow {
    int64_t X;  // discriminants satisfy X < |d| <= 2X
    double x;   // prefix cut, t = floor(|d| / x)
    // Optional explicit magnitude range (lo, hi] replacing (X, 2X].
    std::optional<std::pair<int64_t, int64_t>> abs_range;

    SearchWindow(int64_t X_, double x_) : X(X_), x(x_) {
        if (X < 3) throw std::invalid_argument("SearchWindow: X must be >= 3");
        if (!(x >= 1)) throw std::invalid_argument("SearchWindow: x must be >= 1");
    }
};

struct SearchResult {
    int64_t d_star;
    int64_t value;      // target_sum(d_star, x)
    double normalized;  // value / sqrt(X / x)
    double predicted;   // closed-form reference line (o(1) dropped)
};

/// Exhaustive argmax of target_sum over the window.  Signed maximum by
/// default, |target_sum| when abs_value is set.  Deterministic tie-break:
/// smallest |d|, then the negative twin.
SearchResult search_max(const SearchWindow& w, bool abs_value = false, unsigned threads = 0);

}  // namespace qcs
