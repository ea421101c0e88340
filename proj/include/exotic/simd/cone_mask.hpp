#pragma once

// Batched positive-cone prefilter for the alternating Weyl sums.
//
// For a fixed permuted vector y and target t, the 2^n sign patterns m give
// the candidates (s_m ⊙ y) - t, where s_m negates coordinate j iff bit j of m
// is set. A candidate can only carry a nonzero partition count when all of its
// prefix sums are nonnegative; the kernels compute that flag for every m.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace exotic::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Largest rank the kernels accept.
inline constexpr int kMaxRank = 16;

/// flags.size() must be 1 << y.size(); y and t have equal length <= kMaxRank.
void cone_mask_scalar(std::span<const std::int32_t> y, std::span<const std::int32_t> t,
                      std::span<std::uint8_t> flags);

/// Same contract; only callable when the CPU reports AVX2.
void cone_mask_avx2(std::span<const std::int32_t> y, std::span<const std::int32_t> t,
                    std::span<std::uint8_t> flags);

bool avx2_compiled();
/// Best ISA the running CPU supports among the compiled variants.
Isa detect_isa();
/// Honours set_isa_override and the EXOTIC_SIMD environment variable ("scalar"/"avx2").
Isa active_isa();
void set_isa_override(std::optional<Isa> isa);

/// Dispatches to the active kernel.
void cone_mask(std::span<const std::int32_t> y, std::span<const std::int32_t> t,
               std::span<std::uint8_t> flags);

} // namespace exotic::simd
