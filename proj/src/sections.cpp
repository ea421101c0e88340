#include "exotic/sections.hpp"

#include "exotic/characters.hpp"
#include "exotic/errors.hpp"
#include "exotic/kostant.hpp"
#include "exotic/rootdata.hpp"
#include "exotic/weyl_sum.hpp"

#include <atomic>
#include <thread>

namespace exotic {

namespace {

void require_dominant_pair(const Weight& mu, const Weight& lambda)
{
    if (!is_dominant(mu))
        throw DomainError("mu must be dominant, got " + mu.str());
    if (!is_dominant(lambda))
        throw DomainError("lambda must be dominant, got " + lambda.str());
    if (mu.rank() != lambda.rank())
        throw DomainError("rank mismatch between " + mu.str() + " and " + lambda.str());
}

} // namespace

SectionMultiplicity h0_mult(const Weight& mu, const Weight& lambda)
{
    require_dominant_pair(mu, lambda);
    const Weight r = rho(mu.rank());
    const KostantCounter& p = kostant_counter(mu.rank(), KostantKind::p_exotic);
    mpz_class sum = 0;
    for_each_cone_term(mu + r, lambda + r, [&](int sign, const Weight& arg) {
        const mpz_class c = p.count(arg);
        if (sign > 0)
            sum += c;
        else
            sum -= c;
    });
    if (sum < 0)
        throw InternalError("negative section multiplicity " + sum.get_str() + " for mu=" + mu.str() +
                            ", lambda=" + lambda.str());
    return {mu, lambda, sum};
}

mpz_class h0_mult_subsets(const Weight& mu, const Weight& lambda)
{
    require_dominant_pair(mu, lambda);
    const int n = mu.rank();
    const WeightMultiplicityTable& table = freudenthal_table(mu);
    mpz_class sum = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        Weight w = lambda;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1u)
                w[i] += 1;
        sum += table.at(w);
    }
    return sum;
}

std::vector<Weight> dominant_shell(int rank, int total)
{
    std::vector<Weight> out;
    std::vector<int> cur(static_cast<std::size_t>(rank));
    auto rec = [&](auto&& self, int i, int cap, int left) -> void {
        if (i == rank) {
            if (left == 0)
                out.emplace_back(cur);
            return;
        }
        for (int v = std::min(cap, left); v >= 0; --v) {
            // Remaining slots can hold at most v each.
            if (static_cast<long long>(v) * (rank - i) < left)
                break;
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v, left - v);
        }
    };
    rec(rec, 0, total, total);
    return out;
}

std::map<Weight, mpz_class> h0_decompose(const Weight& lambda, int degree_bound)
{
    if (!is_dominant(lambda))
        throw DomainError("lambda must be dominant, got " + lambda.str());
    if (degree_bound < 0)
        throw DomainError("degree bound must be nonnegative");
    std::map<Weight, mpz_class> out;
    for (int shell = 0; shell <= degree_bound; ++shell) {
        for (const auto& mu : dominant_shell(lambda.rank(), shell)) {
            // Multiplicities vanish off conv(mu); skipping those saves the Weyl sum.
            if (!in_conv(lambda, mu))
                continue;
            auto value = h0_mult(mu, lambda).value;
            if (value > 0)
                out.emplace(mu, std::move(value));
        }
    }
    return out;
}


std::size_t SweepReport::violation_count() const
{
    std::size_t k = 0;
    for (const auto& c : cells)
        k += c.violations.size();
    return k;
}

SweepReport sweep_grid(int rank, int bound, int threads)
{
    if (bound < 0)
        throw DomainError("sweep bound must be nonnegative");
    SweepReport report;
    report.rank = rank;
    report.bound = bound;
    std::vector<Weight> grid;
    for (int s = 0; s <= bound; ++s)
        for (auto& w : dominant_shell(rank, s))
            grid.push_back(std::move(w));
    for (const auto& mu : grid)
        for (const auto& lambda : grid)
            report.cells.push_back(SweepCell{mu, lambda, std::nullopt, 0, false, {}});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < report.cells.size(); i = next++) {
            SweepCell& cell = report.cells[i];
            try {
                cell.route_a = h0_mult(cell.mu, cell.lambda).value;
            } catch (const InternalError& e) {
                cell.violations.emplace_back(std::string("route A: ") + e.what());
            }
            cell.route_b = h0_mult_subsets(cell.mu, cell.lambda);
            cell.in_conv = in_conv(cell.lambda, cell.mu);
            if (cell.route_a) {
                if (*cell.route_a != cell.route_b)
                    cell.violations.emplace_back("route disagreement");
                if (!cell.in_conv && *cell.route_a != 0)
                    cell.violations.emplace_back("nonzero outside conv(mu)");
                if (cell.mu == cell.lambda && *cell.route_a != 1)
                    cell.violations.emplace_back("h0(lambda, lambda) != 1");
            }
            if (cell.route_b < 0)
                cell.violations.emplace_back("negative route B value");
        }
    };
    const int count = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < count; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return report;
}

} // namespace exotic
