#include "exotic/characters.hpp"

#include "exotic/errors.hpp"
#include "exotic/kostant.hpp"
#include "exotic/rootdata.hpp"
#include "exotic/weyl_sum.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace exotic {

namespace {

void require_dominant(const Weight& mu)
{
    if (!is_dominant(mu))
        throw DomainError("highest weight must be dominant, got " + mu.str());
}

// Positive on every positive root of C_n.
long long height(const Weight& x)
{
    long long h = 0;
    for (int i = 0; i < x.rank(); ++i)
        h += static_cast<long long>(x.rank() - i) * x[i];
    return h;
}

std::unique_ptr<WeightMultiplicityTable> build_freudenthal(const Weight& mu)
{
    const int n = mu.rank();
    const Weight r = rho(n);
    const auto roots = RootDataC::of(n).positive_roots;

    // Candidate weights: the hull of W mu intersected with mu + root lattice.
    std::vector<Weight> support;
    for (const auto& dom : dominant_weights_below(mu)) {
        if ((mu - dom).total() % 2 != 0)
            continue;
        for (auto& w : weyl_orbit(dom))
            support.push_back(std::move(w));
    }
    std::sort(support.begin(), support.end(), [&](const Weight& a, const Weight& b) {
        const long long ha = height(mu - a), hb = height(mu - b);
        return ha != hb ? ha < hb : a < b;
    });

    auto table = std::make_unique<WeightMultiplicityTable>();
    table->highest = mu;
    std::map<Weight, mpz_class> mult;
    const long long top = (mu + r).norm2();
    for (const auto& lambda : support) {
        if (lambda == mu) {
            mult[lambda] = 1;
            continue;
        }
        mpz_class acc = 0;
        for (const auto& alpha : roots) {
            Weight up = lambda + alpha;
            for (;;) {
                auto it = mult.find(up);
                if (it == mult.end())
                    break;
                acc += it->second * mpz_class(std::to_string(dot(up, alpha)));
                up += alpha;
            }
        }
        acc *= 2;
        const long long denom = top - (lambda + r).norm2();
        if (denom <= 0)
            throw InternalError("Freudenthal denominator vanished at " + lambda.str());
        const mpz_class d(std::to_string(denom));
        if (acc % d != 0)
            throw InternalError("Freudenthal recursion produced a non-integer at " + lambda.str());
        mult[lambda] = acc / d;
    }
    for (auto& [w, m] : mult)
        if (m != 0)
            table->entries.emplace(w, m);
    return table;
}

} // namespace

mpz_class WeightMultiplicityTable::at(const Weight& lambda) const
{
    auto it = entries.find(lambda);
    return it == entries.end() ? mpz_class(0) : it->second;
}

mpz_class WeightMultiplicityTable::total() const
{
    mpz_class s = 0;
    for (const auto& [w, m] : entries)
        s += m;
    return s;
}

mpz_class weight_mult(const Weight& mu, const Weight& lambda)
{
    require_dominant(mu);
    if (lambda.rank() != mu.rank())
        throw DomainError("rank mismatch between " + mu.str() + " and " + lambda.str());
    const Weight r = rho(mu.rank());
    const KostantCounter& p = kostant_counter(mu.rank(), KostantKind::p);
    mpz_class sum = 0;
    for_each_cone_term(mu + r, lambda + r, [&](int sign, const Weight& arg) {
        const mpz_class c = p.count(arg);
        if (sign > 0)
            sum += c;
        else
            sum -= c;
    });
    if (sum < 0)
        throw InternalError("negative weight multiplicity for mu=" + mu.str() + ", lambda=" + lambda.str());
    return sum;
}

const WeightMultiplicityTable& freudenthal_table(const Weight& mu)
{
    require_dominant(mu);
    static std::mutex mutex;
    static std::map<Weight, std::unique_ptr<WeightMultiplicityTable>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(mu); it != cache.end())
            return *it->second;
    }
    auto built = build_freudenthal(mu);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(mu, std::move(built));
    return *it->second;
}

mpz_class weight_mult_oracle(const Weight& mu, const Weight& lambda)
{
    if (lambda.rank() != mu.rank())
        throw DomainError("rank mismatch between " + mu.str() + " and " + lambda.str());
    return freudenthal_table(mu).at(lambda);
}

mpz_class weyl_dim(const Weight& mu)
{
    require_dominant(mu);
    const Weight r = rho(mu.rank());
    const Weight shifted = mu + r;
    mpz_class num = 1, den = 1;
    for (const auto& alpha : RootDataC::of(mu.rank()).positive_roots) {
        num *= mpz_class(std::to_string(dot(shifted, alpha)));
        den *= mpz_class(std::to_string(dot(r, alpha)));
    }
    if (num % den != 0)
        throw InternalError("Weyl dimension formula produced a non-integer for " + mu.str());
    return num / den;
}

WeightMultiplicityTable all_weights(const Weight& mu)
{
    require_dominant(mu);
    WeightMultiplicityTable table;
    table.highest = mu;
    for (const auto& dom : dominant_weights_below(mu)) {
        const mpz_class m = weight_mult(mu, dom);
        if (m == 0)
            continue;
        for (const auto& w : weyl_orbit(dom))
            table.entries.emplace(w, m);
    }
    return table;
}

} // namespace exotic
