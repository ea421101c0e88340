// Compiled with -mavx2; callers must check the CPU first.
#include "exotic/simd/cone_mask.hpp"

#include <immintrin.h>

#include <cstddef>

namespace exotic::simd {

void cone_mask_avx2(std::span<const std::int32_t> y, std::span<const std::int32_t> t,
                    std::span<std::uint8_t> flags)
{
    const std::size_t n = y.size();
    const std::size_t count = std::size_t{1} << n;
    if (count < 8) {
        cone_mask_scalar(y, t, flags);
        return;
    }

    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i zero = _mm256_setzero_si256();

    for (std::size_t base = 0; base < count; base += 8) {
        const __m256i masks = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(base)), lane);
        __m256i prefix = zero;
        __m256i low = zero;
        for (std::size_t j = 0; j < n; ++j) {
            const __m256i bit = _mm256_and_si256(_mm256_srli_epi32(masks, static_cast<int>(j)), one);
            // sign-flip: (y xor -bit) + bit == bit ? -y : y
            const __m256i neg = _mm256_sub_epi32(zero, bit);
            const __m256i yj = _mm256_set1_epi32(y[j]);
            const __m256i val = _mm256_add_epi32(_mm256_xor_si256(yj, neg), bit);
            prefix = _mm256_add_epi32(prefix, _mm256_sub_epi32(val, _mm256_set1_epi32(t[j])));
            low = _mm256_min_epi32(low, prefix);
        }
        // low < 0 marks a failing lane.
        const int bad = _mm256_movemask_ps(_mm256_castsi256_ps(low));
        for (int k = 0; k < 8; ++k)
            flags[base + static_cast<std::size_t>(k)] = ((bad >> k) & 1) ? 0 : 1;
    }
}

} // namespace exotic::simd
