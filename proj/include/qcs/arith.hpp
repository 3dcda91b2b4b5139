#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcs {

/// Kronecker symbol (d|n), total over all integer pairs.  Conventions:
/// (d|0) = 1 iff |d| = 1, (d|-1) = -1 iff d < 0, completely multiplicative
/// in n, equal to the Legendre symbol for odd prime n not dividing d.
int kronecker(int64_t d, int64_t n);

/// True iff d is a fundamental discriminant: d == 1 (mod 4) squarefree, or
/// d = 4m with m == 2 or 3 (mod 4) squarefree.  d = 1 is excluded.
bool is_fundamental(int64_t d);

bool is_squarefree(int64_t n);  // n >= 1

/// Validated fundamental discriminant, carrier of the real primitive
/// character chi_d(n) = kronecker(d, n) of conductor |d|.
class FundamentalDiscriminant {
public:
    explicit FundamentalDiscriminant(int64_t d) : d_(d) {
        if (!is_fundamental(d))
            throw std::invalid_argument("not a fundamental discriminant: " + std::to_string(d));
    }
    // For values coming out of the fundamentality sieves.
    static FundamentalDiscriminant trusted(int64_t d) { return FundamentalDiscriminant(d, 0); }

    int64_t value() const { return d_; }
    int64_t conductor() const { return d_ < 0 ? -d_ : d_; }
    int chi(int64_t n) const { return kronecker(d_, n); }
    bool even_character() const { return d_ > 0; }  // chi_d(-1) = +1

private:
    FundamentalDiscriminant(int64_t d, int) : d_(d) {}
    int64_t d_;
};

struct SquarefreeDecomposition {
    int64_t n;
    int64_t n0;  // squarefree part
    int64_t n1;  // cofactor, n = n0 * n1^2
};

SquarefreeDecomposition squarefree_decompose(int64_t n);  // n >= 1

int mobius(int64_t n);                 // n >= 1
int64_t largest_prime_factor(int64_t n);  // n >= 2

struct PrimePower {
    int64_t p;
    int e;
};
std::vector<PrimePower> factorize(int64_t n);  // n >= 1, ascending primes

struct PrimeTable {
    int64_t limit = 0;
    std::vector<int64_t> primes;  // ascending, complete up to limit
    static PrimeTable up_to(int64_t limit);
};

/// spf[i] = smallest prime factor of i for 2 <= i <= limit; spf[0] = spf[1] = 0.
std::vector<int32_t> smallest_prime_factor_table(int64_t limit);

/// All fundamental d in [lo, hi], ascending.  Switches from per-element
/// testing to a squarefree sieve once the span exceeds 10^4.
std::vector<int64_t> enumerate_fundamental(int64_t lo, int64_t hi);

/// All fundamental d with alo < |d| <= ahi, ordered by |d| with the negative
/// twin before the positive one at equal |d|.
std::vector<int64_t> fundamental_abs_window(int64_t alo, int64_t ahi);

}  // namespace qcs
