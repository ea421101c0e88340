#include "exotic/errors.hpp"
#include "exotic/rootdata.hpp"
#include "exotic/simd/cone_mask.hpp"
#include "exotic/weyl_sum.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace exotic;

namespace {

std::vector<std::uint8_t> reference(const std::vector<std::int32_t>& y, const std::vector<std::int32_t>& t)
{
    const std::size_t n = y.size();
    std::vector<std::uint8_t> out(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < out.size(); ++mask) {
        long sum = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            sum += ((mask >> i & 1U) ? -y[i] : y[i]) - t[i];
            ok = ok && sum >= 0;
        }
        out[mask] = ok ? 1 : 0;
    }
    return out;
}

} // namespace

TEST_CASE("scalar kernel matches a direct evaluation")
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> val(-6, 6);
    for (std::size_t n = 0; n <= 10; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::int32_t> y(n), t(n);
            for (auto& c : y)
                c = val(rng);
            for (auto& c : t)
                c = val(rng);
            std::vector<std::uint8_t> flags(std::size_t{1} << n);
            simd::cone_mask_scalar(y, t, flags);
            CHECK(flags == reference(y, t));
        }
}

TEST_CASE("avx2 kernel matches scalar")
{
    if (!simd::avx2_compiled() || simd::detect_isa() != simd::Isa::avx2) {
        MESSAGE("avx2 not available, skipping");
        return;
    }
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> val(-1000, 1000);
    for (std::size_t n = 0; n <= 12; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::int32_t> y(n), t(n);
            for (auto& c : y)
                c = val(rng) / (trial % 3 == 0 ? 100 : 1);
            for (auto& c : t)
                c = val(rng) / (trial % 3 == 0 ? 100 : 1);
            std::vector<std::uint8_t> a(std::size_t{1} << n), b(std::size_t{1} << n);
            simd::cone_mask_scalar(y, t, a);
            simd::cone_mask_avx2(y, t, b);
            CHECK(a == b);
        }
}

TEST_CASE("dispatcher honours the override and validates sizes")
{
    simd::set_isa_override(simd::Isa::scalar);
    CHECK(simd::active_isa() == simd::Isa::scalar);
    simd::set_isa_override(std::nullopt);
    CHECK(simd::active_isa() == simd::detect_isa());
    std::vector<std::int32_t> y{1, 2}, t{0};
    std::vector<std::uint8_t> flags(4);
    CHECK_THROWS_AS(simd::cone_mask(y, t, flags), DomainError);
    CHECK(simd::isa_name(simd::Isa::avx2) == "avx2");
}

TEST_CASE("weyl sum terms are the same under both kernels")
{
    auto collect = [](const Weight& a, const Weight& b) {
        std::vector<std::pair<int, Weight>> terms;
        for_each_cone_term(a, b, [&](int sign, const Weight& arg) { terms.emplace_back(sign, arg); });
        std::sort(terms.begin(), terms.end());
        return terms;
    };
    const std::vector<std::pair<Weight, Weight>> cases{
        {Weight{4, 2, 1}, Weight{1, 1, 0}}, {Weight{6, 3, 2, 1}, Weight{0, 0, 0, 0}}, {Weight{3, 2, 1}, Weight{5, 4, 1}}};
    for (const auto& [a, b] : cases) {
        simd::set_isa_override(simd::Isa::scalar);
        const auto s = collect(a, b);
        simd::set_isa_override(std::nullopt);
        CHECK(s == collect(a, b));
        std::vector<std::pair<int, Weight>> direct;
        for (const auto& w : weyl_group(a.rank())) {
            const Weight arg = w.act(a) - b;
            int sum = 0;
            bool ok = true;
            for (int i = 0; i < arg.rank(); ++i) {
                sum += arg[i];
                ok = ok && sum >= 0;
            }
            if (ok)
                direct.emplace_back(w.sgn(), arg);
        }
        std::sort(direct.begin(), direct.end());
        CHECK(s == direct);
    }
}
