#include "exotic/simd/cone_mask.hpp"

#include "exotic/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace exotic::simd {

namespace {

// -1: none, otherwise static_cast<int>(Isa).
std::atomic<int> g_override{-1};

} // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_compiled()
{
#ifdef EXOTIC_HAVE_AVX2
    return true;
#else
    return false;
#endif
}

Isa detect_isa()
{
#if defined(EXOTIC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2"))
        return Isa::avx2;
#endif
    return Isa::scalar;
}

Isa active_isa()
{
    const int forced = g_override.load(std::memory_order_relaxed);
    if (forced >= 0)
        return static_cast<Isa>(forced);
    static const Isa chosen = [] {
        const Isa best = detect_isa();
        if (const char* env = std::getenv("EXOTIC_SIMD")) {
            const std::string want(env);
            if (want == "scalar")
                return Isa::scalar;
            if (want == "avx2" && best == Isa::avx2)
                return Isa::avx2;
        }
        return best;
    }();
    return chosen;
}

void set_isa_override(std::optional<Isa> isa)
{
    if (isa && *isa == Isa::avx2 && detect_isa() != Isa::avx2)
        throw DomainError("AVX2 kernel requested but not supported on this CPU");
    g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void cone_mask(std::span<const std::int32_t> y, std::span<const std::int32_t> t,
               std::span<std::uint8_t> flags)
{
    if (y.size() != t.size() || y.size() > static_cast<std::size_t>(kMaxRank) ||
        flags.size() != (std::size_t{1} << y.size()))
        throw DomainError("cone_mask: inconsistent buffer sizes");
#ifdef EXOTIC_HAVE_AVX2
    if (active_isa() == Isa::avx2) {
        cone_mask_avx2(y, t, flags);
        return;
    }
#endif
    cone_mask_scalar(y, t, flags);
}

} // namespace exotic::simd
