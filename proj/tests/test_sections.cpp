#include "exotic/errors.hpp"
#include "exotic/rootdata.hpp"
#include "exotic/sections.hpp"

#include <doctest.h>

#include <algorithm>

using namespace exotic;

namespace {

std::vector<Weight> dominant_upto(int n, int bound)
{
    std::vector<Weight> out;
    for (int t = 0; t <= bound; ++t)
        for (const auto& w : dominant_shell(n, t))
            out.push_back(w);
    return out;
}

} // namespace

TEST_CASE("dominant_shell")
{
    auto shell = dominant_shell(2, 2);
    std::sort(shell.begin(), shell.end());
    CHECK(shell == std::vector<Weight>{Weight{1, 1}, Weight{2, 0}});
    for (const auto& w : dominant_shell(3, 5)) {
        CHECK(is_dominant(w));
        CHECK(w.total() == 5);
    }
    CHECK(dominant_shell(3, 5).size() == 5);
}

TEST_CASE("rank one: sections of O(l) contain V_m exactly once for m >= l")
{
    for (int l = 0; l <= 6; ++l)
        for (int m = 0; m <= 8; ++m) {
            const mpz_class expect = m >= l ? 1 : 0;
            CHECK(h0_mult(Weight{m}, Weight{l}).value == expect);
            CHECK(h0_mult_subsets(Weight{m}, Weight{l}) == expect);
        }
}

TEST_CASE("routes agree, trivial isotypic part, support and nonnegativity on the grid")
{
    for (int n = 1; n <= 3; ++n) {
        const auto grid = dominant_upto(n, 4);
        for (const auto& lambda : grid)
            for (const auto& mu : grid) {
                const mpz_class a = h0_mult(mu, lambda).value;
                const mpz_class b = h0_mult_subsets(mu, lambda);
                CHECK_MESSAGE(a == b, mu.str() << " / " << lambda.str());
                CHECK(a >= 0);
                if (mu == lambda)
                    CHECK(a == 1);
                if (!in_conv(lambda, mu))
                    CHECK(a == 0);
            }
    }
}

TEST_CASE("sweep_grid reports no violations and threads give the same cells")
{
    const SweepReport one = sweep_grid(2, 4, 1);
    const SweepReport many = sweep_grid(2, 4, 3);
    CHECK(one.violation_count() == 0);
    REQUIRE(one.cells.size() == many.cells.size());
    for (std::size_t i = 0; i < one.cells.size(); ++i) {
        CHECK(one.cells[i].mu == many.cells[i].mu);
        CHECK(one.cells[i].route_b == many.cells[i].route_b);
    }
    CHECK(sweep_grid(3, 4, 2).violation_count() == 0);
}

TEST_CASE("h0_decompose lists exactly the nonzero multiplicities")
{
    const Weight lambda{1, 0};
    const auto parts = h0_decompose(lambda, 4);
    for (const auto& mu : dominant_upto(2, 4)) {
        const mpz_class m = h0_mult(mu, lambda).value;
        const auto it = parts.find(mu);
        if (m == 0)
            CHECK(it == parts.end());
        else
            CHECK((it != parts.end() && it->second == m));
    }
    CHECK(parts.at(lambda) == 1);
}

TEST_CASE("non-dominant input is rejected")
{
    CHECK_THROWS_AS(h0_mult(Weight{0, 1}, Weight{0, 0}), DomainError);
    CHECK_THROWS_AS(h0_mult(Weight{1, 0}, Weight{-1, 0}), DomainError);
}
