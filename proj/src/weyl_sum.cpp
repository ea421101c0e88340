#include "exotic/weyl_sum.hpp"

#include "exotic/errors.hpp"
#include "exotic/simd/cone_mask.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>

namespace exotic {

namespace {

// Keeps every prefix sum of 16 entries inside int32.
constexpr int kMaxEntry = 1 << 26;

} // namespace

void for_each_cone_term(const Weight& a, const Weight& b,
                        const std::function<void(int sign, const Weight& arg)>& term)
{
    const int n = a.rank();
    if (b.rank() != n)
        throw DomainError("rank mismatch in Weyl sum");
    if (n > simd::kMaxRank)
        throw DomainError("Weyl sums support rank at most " + std::to_string(simd::kMaxRank));
    for (int i = 0; i < n; ++i)
        if (std::abs(a[i]) > kMaxEntry || std::abs(b[i]) > kMaxEntry)
            throw DomainError("weight entries too large for the Weyl sum kernel");

    const auto un = static_cast<std::size_t>(n);
    std::vector<int> perm(un);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::int32_t> y(un), t(b.coords().begin(), b.coords().end());
    std::vector<std::uint8_t> flags(std::size_t{1} << un);
    std::vector<int> arg(un);

    do {
        int perm_sign = 1;
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i + 1; j < un; ++j)
                if (perm[i] > perm[j])
                    perm_sign = -perm_sign;
        for (std::size_t i = 0; i < un; ++i)
            y[static_cast<std::size_t>(perm[i])] = a[static_cast<int>(i)];

        simd::cone_mask(y, t, flags);

        for (std::size_t m = 0; m < flags.size(); ++m) {
            if (!flags[m])
                continue;
            for (std::size_t j = 0; j < un; ++j)
                arg[j] = (((m >> j) & 1u) ? -y[j] : y[j]) - t[j];
            const int sign = (std::popcount(m) % 2 ? -1 : 1) * perm_sign;
            term(sign, Weight(arg));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace exotic
