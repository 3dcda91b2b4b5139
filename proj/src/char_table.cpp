#include "qcs/char_table.hpp"

#include <cstring>
#include <stdexcept>

#include "qcs/kernels.hpp"

namespace qcs {

CharTable::CharTable(const FundamentalDiscriminant& d) : d_(d.value()), q_(d.conductor()) {
    auto spf = smallest_prime_factor_table(q_ > 1 ? q_ - 1 : 1);
    fill(spf);
}

CharTable::CharTable(const FundamentalDiscriminant& d, std::span<const int32_t> spf)
    : d_(d.value()), q_(d.conductor()) {
    if (int64_t(spf.size()) < q_)
        throw std::invalid_argument("CharTable: spf table shorter than conductor");
    fill(spf);
}

void CharTable::fill(std::span<const int32_t> spf) {
    vals_.assign(size_t(q_), 0);
    vals_[1 % size_t(q_)] = 1;  // q_ >= 3 for every fundamental d
    for (int64_t n = 2; n < q_; ++n) {
        int32_t p = spf[size_t(n)];
        if (p == n)
            vals_[size_t(n)] = int8_t(kronecker(d_, n));
        else
            vals_[size_t(n)] = int8_t(vals_[size_t(p)] * vals_[size_t(n / p)]);
    }
}

void CharTable::fill_row(int8_t* dst, int64_t count) const {
    int64_t written = 0;
    // first stretch: chi(1..q-1) then the period wraps through chi(0) = 0
    while (written < count) {
        int64_t start = (written == 0) ? 1 : 0;
        int64_t take = std::min<int64_t>(q_ - start, count - written);
        std::memcpy(dst + written, vals_.data() + start, size_t(take));
        written += take;
    }
}

int64_t CharTable::prefix_sum(int64_t t) const {
    if (t < 0 || t > q_) throw std::invalid_argument("CharTable::prefix_sum: t out of [0, |d|]");
    if (t == q_) return kernels::i8_sum(vals_.data() + 1, size_t(q_ - 1));
    return kernels::i8_sum(vals_.data() + 1, size_t(t));
}

}  // namespace qcs
