#include "exotic/characters.hpp"
#include "exotic/errors.hpp"
#include "exotic/rootdata.hpp"

#include <doctest.h>

using namespace exotic;

namespace {

std::vector<Weight> dominant_upto(int n, int bound)
{
    std::vector<Weight> out;
    Weight w = Weight::zero(n);
    while (true) {
        if (is_dominant(w) && w.l1() <= bound)
            out.push_back(w);
        int i = 0;
        while (i < n && w[i] == bound)
            w[i++] = 0;
        if (i == n)
            return out;
        ++w[i];
    }
}

// Weyl dimension formula evaluated directly over the positive roots.
mpz_class weyl_dim_oracle(const Weight& mu)
{
    const int n = mu.rank();
    const Weight shifted = mu + rho(n);
    mpq_class d = 1;
    for (const auto& a : RootDataC::of(n).positive_roots)
        d *= mpq_class(mpz_class(static_cast<long>(dot(shifted, a))), mpz_class(static_cast<long>(dot(rho(n), a))));
    d.canonicalize();
    REQUIRE(d.get_den() == 1);
    return d.get_num();
}

} // namespace

TEST_CASE("known dimensions")
{
    CHECK(weyl_dim(Weight{1}) == 2);
    CHECK(weyl_dim(Weight{1, 0}) == 4);
    CHECK(weyl_dim(Weight{1, 1}) == 5);
    CHECK(weyl_dim(Weight{2, 0}) == 10);
    CHECK(weyl_dim(Weight{1, 0, 0}) == 6);
    CHECK(weyl_dim(Weight{1, 1, 0}) == 14);
    CHECK(weyl_dim(Weight{1, 1, 1}) == 14);
    CHECK(weyl_dim(Weight{2, 0, 0}) == 21);
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : dominant_upto(n, 5))
            CHECK(weyl_dim(mu) == weyl_dim_oracle(mu));
}

TEST_CASE("Kostant route equals Freudenthal on conv(mu), |mu|_1 <= 4, n <= 3")
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : dominant_upto(n, 4)) {
            mpz_class total = 0;
            for (const auto& d : dominant_weights_below(mu)) {
                const mpz_class m = weight_mult(mu, d);
                CHECK_MESSAGE(m == weight_mult_oracle(mu, d), mu.str() << " at " << d.str());
                total += m * static_cast<long>(weyl_orbit(d).size());
            }
            CHECK(total == weyl_dim(mu));
            const auto table = all_weights(mu);
            CHECK(table.total() == weyl_dim(mu));
            for (const auto& [w, m] : table.entries) {
                CHECK(in_conv(w, mu));
                CHECK(m == weight_mult_oracle(mu, w));
            }
        }
}

TEST_CASE("multiplicities are Weyl invariant and vanish off the lattice coset")
{
    const Weight mu{2, 1, 0};
    for (const auto& w : weyl_group(3))
        CHECK(weight_mult(mu, w.act(Weight{1, 0, 0})) == weight_mult(mu, Weight{1, 0, 0}));
    CHECK(weight_mult(mu, Weight{1, 1, 0}) == 0);
    CHECK(weight_mult(mu, Weight{3, 0, 0}) == 0);
    CHECK(weight_mult(Weight{1, 1}, Weight{0, 0}) == 1);
    CHECK(weight_mult(Weight{2, 0}, Weight{0, 0}) == 2);
}

TEST_CASE("non-dominant highest weight is rejected")
{
    CHECK_THROWS_AS(weight_mult(Weight{0, 1}, Weight{0, 0}), DomainError);
}
