#include "qcs/arith.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qcs {

int kronecker(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (((a | n) & 1) == 0) return 0;  // both even

    int k = 1;
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v & 1) {
        // (a|2) by a mod 8; a is odd here since n carried the factor 2.
        int am8 = int(((a % 8) + 8) % 8);
        if (am8 == 3 || am8 == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n odd positive: Jacobi loop with reciprocity.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            int nm8 = int(n & 7);
            if (nm8 == 3 || nm8 == 5) k = -k;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) k = -k;
        a %= n;
    }
    return n == 1 ? k : 0;
}

std::vector<PrimePower> factorize(int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<PrimePower> out;
    for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

bool is_squarefree(int64_t n) {
    if (n < 1) throw std::invalid_argument("is_squarefree: n must be >= 1");
    if (n % 4 == 0) return false;
    for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

bool is_fundamental(int64_t d) {
    if (d == 0 || d == 1) return false;
    int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) return is_squarefree(d < 0 ? -d : d);
    if (r == 0) {
        int64_t m = d / 4;
        int64_t rm = ((m % 4) + 4) % 4;
        if (rm != 2 && rm != 3) return false;
        return is_squarefree(m < 0 ? -m : m);
    }
    return false;
}

SquarefreeDecomposition squarefree_decompose(int64_t n) {
    if (n < 1) throw std::invalid_argument("squarefree_decompose: n must be >= 1");
    int64_t n0 = 1, n1 = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e & 1) n0 *= p;
        for (int i = 0; i < e / 2; ++i) n1 *= p;
    }
    return {n, n0, n1};
}

int mobius(int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
    int parity = 0;
    for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++parity;
    }
    if (n > 1) ++parity;
    return (parity & 1) ? -1 : 1;
}

int64_t largest_prime_factor(int64_t n) {
    if (n < 2) throw std::invalid_argument("largest_prime_factor: n must be >= 2");
    int64_t best = 1;
    for (int64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        while (n % p == 0) {
            n /= p;
            best = p;
        }
    }
    return n > 1 ? n : best;
}

PrimeTable PrimeTable::up_to(int64_t limit) {
    PrimeTable t;
    t.limit = limit;
    if (limit < 2) return t;
    std::vector<uint8_t> composite(size_t(limit) + 1, 0);
    for (int64_t i = 2; i * i <= limit; ++i) {
        if (composite[size_t(i)]) continue;
        for (int64_t j = i * i; j <= limit; j += i) composite[size_t(j)] = 1;
    }
    for (int64_t i = 2; i <= limit; ++i)
        if (!composite[size_t(i)]) t.primes.push_back(i);
    return t;
}

std::vector<int32_t> smallest_prime_factor_table(int64_t limit) {
    std::vector<int32_t> spf(size_t(std::max<int64_t>(limit, 1)) + 1, 0);
    for (int64_t i = 2; i <= limit; ++i) {
        if (spf[size_t(i)] != 0) continue;
        for (int64_t j = i; j <= limit; j += i)
            if (spf[size_t(j)] == 0) spf[size_t(j)] = int32_t(i);
    }
    return spf;
}

namespace {

// flags[i] = 1 iff i squarefree, for 0 <= i <= limit (flags[0] = 0).
std::vector<uint8_t> squarefree_flags(int64_t limit) {
    std::vector<uint8_t> flags(size_t(limit) + 1, 1);
    flags[0] = 0;
    for (int64_t p = 2; p * p <= limit; ++p) {
        if (!flags[size_t(p)]) continue;  // p has a square factor, p^2 multiples already marked
        for (int64_t j = p * p; j <= limit; j += p * p) flags[size_t(j)] = 0;
    }
    return flags;
}

// is_fundamental with O(1) squarefree lookups; flags must cover |d|.
bool is_fundamental_flags(int64_t d, const std::vector<uint8_t>& sqf) {
    if (d == 0 || d == 1) return false;
    int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) return sqf[size_t(d < 0 ? -d : d)] != 0;
    if (r == 0) {
        int64_t m = d / 4;
        int64_t rm = ((m % 4) + 4) % 4;
        if (rm != 2 && rm != 3) return false;
        return sqf[size_t(m < 0 ? -m : m)] != 0;
    }
    return false;
}

}  // namespace

std::vector<int64_t> enumerate_fundamental(int64_t lo, int64_t hi) {
    if (lo > hi) throw std::invalid_argument("enumerate_fundamental: lo > hi");
    std::vector<int64_t> out;
    int64_t span = hi - lo;
    if (span <= 10000) {
        for (int64_t d = lo; d <= hi; ++d)
            if (is_fundamental(d)) out.push_back(d);
        return out;
    }
    int64_t amax = std::max(std::llabs(lo), std::llabs(hi));
    auto sqf = squarefree_flags(amax);
    for (int64_t d = lo; d <= hi; ++d)
        if (is_fundamental_flags(d, sqf)) out.push_back(d);
    return out;
}

std::vector<int64_t> fundamental_abs_window(int64_t alo, int64_t ahi) {
    std::vector<int64_t> out;
    if (ahi <= alo) return out;
    if (ahi - alo <= 10000) {
        for (int64_t a = std::max<int64_t>(alo + 1, 2); a <= ahi; ++a) {
            if (is_fundamental(-a)) out.push_back(-a);
            if (is_fundamental(a)) out.push_back(a);
        }
        return out;
    }
    auto sqf = squarefree_flags(ahi);
    for (int64_t a = std::max<int64_t>(alo + 1, 2); a <= ahi; ++a) {
        if (is_fundamental_flags(-a, sqf)) out.push_back(-a);
        if (is_fundamental_flags(a, sqf)) out.push_back(a);
    }
    return out;
}

}  // namespace qcs
