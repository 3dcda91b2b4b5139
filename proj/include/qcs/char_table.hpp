#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcs/arith.hpp"

namespace qcs {

/// Period-|d| value table of chi_d.  Primes are evaluated with the Kronecker
/// symbol, the rest is filled by complete multiplicativity over a smallest-
/// prime-factor table.
class CharTable {
public:
    explicit CharTable(const FundamentalDiscriminant& d);
    // spf must cover [0, |d|); use one shared table when building many.
    CharTable(const FundamentalDiscriminant& d, std::span<const int32_t> spf);

    int64_t discriminant() const { return d_; }
    int64_t conductor() const { return q_; }

    /// chi_d(n) for any integer n (period-|d| lookup).
    int chi(int64_t n) const {
        int64_t r = n % q_;
        if (r < 0) r += q_;
        return vals_[size_t(r)];
    }

    const std::vector<int8_t>& values() const { return vals_; }

    /// Writes chi(1), chi(2), ..., chi(count) cyclically.
    void fill_row(int8_t* dst, int64_t count) const;

    /// sum_{1 <= k <= t} chi(k); requires 0 <= t <= |d|.
    int64_t prefix_sum(int64_t t) const;

    /// Full-period sum (zero for every nonprincipal character).
    int64_t period_sum() const { return prefix_sum(q_); }

private:
    void fill(std::span<const int32_t> spf);
    int64_t d_;
    int64_t q_;
    std::vector<int8_t> vals_;  // index n mod q
};

}  // namespace qcs
