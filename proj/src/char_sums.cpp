#include "qcs/char_sums.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qcs/errors.hpp"
#include "qcs/parallel.hpp"
#include "qcs/resonance.hpp"

namespace qcs {

int64_t floor_div(int64_t q, double x) {
    int64_t t = int64_t(std::floor(double(q) / x));
    while ((long double)(t + 1) * (long double)x <= (long double)q) ++t;
    while (t > 0 && (long double)t * (long double)x > (long double)q) --t;
    return t;
}

int64_t floor_mul(int64_t q, double a) {
    int64_t t = int64_t(std::floor(a * double(q)));
    while ((long double)(t + 1) <= (long double)a * (long double)q) ++t;
    while (t > 0 && (long double)t > (long double)a * (long double)q) --t;
    return t;
}

int64_t char_prefix_sum(const FundamentalDiscriminant& d, int64_t t) {
    if (t <= 0) return 0;
    int64_t q = d.conductor();
    if (t > q) t %= q;  // full periods of a nonprincipal character vanish
    int64_t sum = 0;
    for (int64_t n = 1; n <= t; ++n) sum += kronecker(d.value(), n);
    return sum;
}

int64_t target_sum(const FundamentalDiscriminant& d, double x) {
    if (!(x >= 1)) throw std::invalid_argument("target_sum: x must be >= 1");
    return char_prefix_sum(d, floor_div(d.conductor(), x));
}

SearchResult search_max(const SearchWindow& w, bool abs_value, unsigned threads) {
    int64_t lo = w.X, hi = 2 * w.X;
    if (w.abs_range) {
        lo = w.abs_range->first;
        hi = w.abs_range->second;
    }
    auto ds = fundamental_abs_window(lo, hi);
    if (ds.empty())
        throw DataError("search_max: no fundamental discriminants with " + std::to_string(lo) +
                        " < |d| <= " + std::to_string(hi));

    std::vector<int64_t> vals(ds.size());
    parallel_for_index(int64_t(ds.size()), threads, [&](int64_t i) {
        vals[size_t(i)] = target_sum(FundamentalDiscriminant::trusted(ds[size_t(i)]), w.x);
    });

    // ds is ordered by (|d|, negative first), so keeping the first strict
    // maximum realizes the tie-break.
    size_t best = 0;
    auto key = [&](size_t i) { return abs_value ? std::llabs(vals[i]) : vals[i]; };
    for (size_t i = 1; i < ds.size(); ++i)
        if (key(i) > key(best)) best = i;

    SearchResult r;
    r.d_star = ds[best];
    r.value = vals[best];
    r.normalized = double(r.value) / std::sqrt(double(w.X) / w.x);
    r.predicted = predicted_lower_bound(double(w.X), w.x);
    return r;
}

}  // namespace qcs
