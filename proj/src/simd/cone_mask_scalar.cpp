#include "exotic/simd/cone_mask.hpp"

#include <cstddef>

namespace exotic::simd {

void cone_mask_scalar(std::span<const std::int32_t> y, std::span<const std::int32_t> t,
                      std::span<std::uint8_t> flags)
{
    const std::size_t n = y.size();
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t m = 0; m < count; ++m) {
        std::int32_t prefix = 0;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            const std::int32_t v = ((m >> j) & 1u) ? -y[j] : y[j];
            prefix += v - t[j];
            ok = prefix >= 0;
        }
        flags[m] = ok ? 1 : 0;
    }
}

} // namespace exotic::simd
