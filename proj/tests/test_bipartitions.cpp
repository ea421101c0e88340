#include "exotic/bipartitions.hpp"
#include "exotic/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

using namespace exotic;

namespace {

// Own enumeration of P_{2n}^C: partitions of k where odd parts repeat an even number of times.
std::vector<std::vector<int>> c_partitions(int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            std::map<int, int> mult;
            for (int p : cur)
                ++mult[p];
            bool ok = true;
            for (auto [p, m] : mult)
                ok = ok && (p % 2 == 0 || m % 2 == 0);
            if (ok)
                out.push_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

Bipartition bp(std::vector<int> mu, std::vector<int> nu) { return {Partition(std::move(mu)), Partition(std::move(nu))}; }

} // namespace

TEST_CASE("partitions")
{
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
    CHECK(Partition{3, 1, 0, 0}.length() == 2);
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    for (int k = 0; k <= 12; ++k) {
        std::size_t count = 0;
        for (const auto& p : partitions_of(k))
            count += is_c_partition(p) ? 1 : 0;
        CHECK(count == c_partitions(k).size());
    }
}

TEST_CASE("enumerate_q counts")
{
    // number of bipartitions of n
    const std::vector<std::size_t> expect{1, 2, 5, 10, 20, 36, 65};
    for (int n = 0; n <= 6; ++n)
        CHECK(enumerate_q(n).size() == expect[static_cast<std::size_t>(n)]);
}

TEST_CASE("closure order examples")
{
    CHECK(closure_leq(bp({}, {2}), bp({1}, {1})));
    CHECK_FALSE(closure_leq(bp({1}, {1}), bp({}, {2})));
    CHECK_FALSE(closure_leq(bp({1, 1}, {}), bp({}, {2})));
    CHECK_FALSE(closure_leq(bp({}, {2}), bp({1, 1}, {})));
    CHECK_THROWS_AS(closure_leq(bp({1}, {}), bp({2}, {})), DomainError);
}

TEST_CASE("closure_leq is a partial order for n <= 6")
{
    for (int n = 0; n <= 6; ++n) {
        const auto q = enumerate_q(n);
        for (const auto& a : q) {
            CHECK(closure_leq(a, a));
            for (const auto& b : q) {
                if (a != b && closure_leq(a, b))
                    CHECK_FALSE(closure_leq(b, a));
                if (!closure_leq(a, b))
                    continue;
                for (const auto& c : q)
                    if (closure_leq(b, c))
                        CHECK(closure_leq(a, c));
            }
        }
    }
}

TEST_CASE("C-distinguished examples")
{
    CHECK(is_c_distinguished(bp({1}, {})));
    CHECK(is_c_distinguished(bp({}, {1})));
    CHECK_FALSE(is_c_distinguished(bp({1, 1, 1}, {3})));
}

TEST_CASE("phi_c and phi_c_hat examples")
{
    CHECK(phi_c(bp({1, 1, 1}, {3})) == Partition{4, 4, 2, 1, 1});
    CHECK(phi_c(bp({1}, {})) == Partition{2});
    CHECK(phi_c(bp({}, {1})) == Partition{1, 1});
    CHECK(phi_c_hat(Partition{4, 4, 2, 1, 1}) == bp({2, 1, 1}, {2}));
    CHECK(phi_c_hat(Partition{2}) == bp({1}, {}));
    CHECK(phi_c_hat(Partition{1, 1}) == bp({}, {1}));
    CHECK(collapse(bp({1, 1, 1}, {3})) == bp({2, 1, 1}, {2}));
    CHECK(collapse(bp({1}, {})) == bp({1}, {}));
    CHECK(collapse(bp({}, {1})) == bp({}, {1}));
    CHECK_THROWS_AS(phi_c_hat(Partition{3}), DomainError);
    CHECK_THROWS_AS(phi_c_hat(Partition{3, 3, 1, 1, 1, 1, 1}), DomainError);
}

TEST_CASE("merge_pair rejects odd entries")
{
    std::vector<int> seq{1, 3};
    CHECK_THROWS_AS(detail::merge_pair(seq, 0), InternalError);
}

TEST_CASE("mutually inverse order isomorphism Q_n^C <-> P_2n^C for n <= 6")
{
    for (int n = 0; n <= 6; ++n) {
        std::vector<Bipartition> special;
        for (const auto& b : enumerate_q(n)) {
            const Partition lambda = phi_c(b);
            CHECK(lambda.size() == 2 * n);
            CHECK(is_c_partition(lambda));
            const Bipartition c = collapse(b);
            CHECK(is_c_distinguished(c));
            CHECK(collapse(c) == c);
            if (is_c_distinguished(b)) {
                CHECK(phi_c_hat(lambda) == b);
                special.push_back(b);
            }
        }
        const auto targets = c_partitions(2 * n);
        CHECK(special.size() == targets.size());
        std::set<Partition> images;
        for (const auto& parts : targets) {
            const Partition lambda(parts);
            CHECK(phi_c(phi_c_hat(lambda)) == lambda);
            images.insert(lambda);
        }
        for (const auto& a : special) {
            CHECK(images.count(phi_c(a)) == 1);
            for (const auto& b : special)
                CHECK_MESSAGE(closure_leq(a, b) == dominance_leq(phi_c(a), phi_c(b)), a.label() << " vs " << b.label());
        }
    }
}

TEST_CASE("phi_c is confluent under random merge orders")
{
    std::mt19937 rng(12345);
    for (int n = 0; n <= 6; ++n)
        for (const auto& b : enumerate_q(n))
            for (int trial = 0; trial < 8; ++trial) {
                const Partition got = phi_c_with_order(b, [&](const std::vector<std::size_t>& eligible) {
                    return eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
                });
                CHECK(got == phi_c(b));
            }
}

TEST_CASE("filtration profile")
{
    const auto ex = filtration_dims(bp({1, 1, 1}, {3}));
    CHECK(ex.dim() == 12);
    CHECK(ex.at(4) == 0);
    CHECK(ex.at(3) == 2);
    CHECK(ex.at(2) == 2);
    CHECK(ex.at(1) == 5);
    CHECK(ex.at(0) == 7);
    CHECK(ex.at(-1) == 10);
    CHECK(ex.at(-2) == 10);
    CHECK(ex.at(-3) == 12);
    const auto one = filtration_dims(bp({1}, {}));
    CHECK(one.at(1) == 1);
    CHECK(one.at(0) == 1);
    CHECK(one.at(-1) == 2);
    for (int n = 0; n <= 6; ++n)
        for (const auto& b : enumerate_q(n)) {
            const auto f = filtration_dims(b);
            for (int a = f.min_level() - 2; a <= f.max_level() + 2; ++a) {
                CHECK(f.at(a) + f.at(1 - a) == 2 * n);
                CHECK(f.at(a) >= f.at(a + 1));
            }
        }
}

TEST_CASE("Hasse diagrams")
{
    const auto h0 = hasse(0);
    CHECK(h0.nodes.size() == 1);
    CHECK(h0.edges.empty());
    const auto h1 = hasse(1);
    REQUIRE(h1.edges.size() == 1);
    CHECK(h1.nodes[static_cast<std::size_t>(h1.edges[0].first)] == bp({}, {1}));
    CHECK(h1.nodes[static_cast<std::size_t>(h1.edges[0].second)] == bp({1}, {}));

    const auto h2 = hasse(2);
    CHECK(h2.nodes.size() == 5);
    std::set<std::pair<std::string, std::string>> edges;
    for (auto [lo, up] : h2.edges)
        edges.emplace(h2.nodes[static_cast<std::size_t>(lo)].label(), h2.nodes[static_cast<std::size_t>(up)].label());
    const std::set<std::pair<std::string, std::string>> expect{
        {"1|1", "2|"}, {"1,1|", "1|1"}, {"|2", "1|1"}, {"|1,1", "1,1|"}, {"|1,1", "|2"}};
    CHECK(edges == expect);
    int incomparable = 0;
    for (std::size_t i = 0; i < h2.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < h2.nodes.size(); ++j)
            if (!closure_leq(h2.nodes[i], h2.nodes[j]) && !closure_leq(h2.nodes[j], h2.nodes[i]))
                ++incomparable;
    CHECK(incomparable == 1);

    const std::string dot = emit_dot(2);
    CHECK(dot.rfind("digraph Q2 {", 0) == 0);
    CHECK(dot.find("label=\"|2\"]") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 5);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 5 + 5 + 1);
}
