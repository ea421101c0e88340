#include "exotic/kostant.hpp"

#include "exotic/errors.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace exotic {

namespace {

constexpr int kMaxRank = 16;
constexpr int kMaxEntry = 30000;

struct Key {
    std::array<std::int16_t, kMaxRank> r{};
    std::uint16_t idx = 0;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept
    {
        std::size_t h = 1469598103934665603ull ^ k.idx;
        for (auto c : k.r) {
            h ^= static_cast<std::uint16_t>(c);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using Residual = std::array<int, kMaxRank>;

std::atomic<std::size_t> g_cache_bytes{std::size_t{256} << 20};

} // namespace

std::vector<Weight> kostant_summands(int rank, KostantKind kind)
{
    std::vector<Weight> out;
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            out.push_back(Weight::unit(rank, i) - Weight::unit(rank, j));
            out.push_back(Weight::unit(rank, i) + Weight::unit(rank, j));
        }
        out.push_back((kind == KostantKind::p ? 2 : 1) * Weight::unit(rank, i));
    }
    return out;
}

struct KostantCounter::Impl {
    int n;
    KostantKind kind;
    std::size_t max_entries;
    std::vector<Residual> summand;  // dense copies of the summands
    std::vector<int> lead;          // leading index per summand; lead[size] = n
    std::vector<bool> last_in_group;
    int long_multiple;

    mutable std::shared_mutex mutex;
    mutable std::unordered_map<Key, mpz_class, KeyHash> young;
    mutable std::unordered_map<Key, mpz_class, KeyHash> old;

    Impl(int rank, KostantKind k, std::size_t cap)
        : n(rank), kind(k), max_entries(cap), long_multiple(k == KostantKind::p ? 2 : 1)
    {
        const auto ws = kostant_summands(rank, k);
        for (std::size_t s = 0; s < ws.size(); ++s) {
            Residual r{};
            int first = -1;
            for (int i = 0; i < rank; ++i) {
                r[static_cast<std::size_t>(i)] = ws[s][i];
                if (first < 0 && ws[s][i] != 0)
                    first = i;
            }
            summand.push_back(r);
            lead.push_back(first);
        }
        lead.push_back(rank);
        for (std::size_t s = 0; s < summand.size(); ++s)
            last_in_group.push_back(lead[s + 1] != lead[s]);
    }

    bool feasible(std::size_t idx, const Residual& r) const
    {
        const int from = lead[idx];
        for (int i = 0; i < from; ++i)
            if (r[static_cast<std::size_t>(i)] != 0)
                return false;
        int prefix = 0;
        for (int i = from; i < n; ++i) {
            prefix += r[static_cast<std::size_t>(i)];
            if (prefix < 0)
                return false;
        }
        return true;
    }

    Key key(std::size_t idx, const Residual& r) const
    {
        Key k;
        k.idx = static_cast<std::uint16_t>(idx);
        for (int i = 0; i < n; ++i)
            k.r[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(r[static_cast<std::size_t>(i)]);
        return k;
    }

    bool lookup(const Key& k, mpz_class& out) const
    {
        {
            std::shared_lock lock(mutex);
            if (auto it = young.find(k); it != young.end()) {
                out = it->second;
                return true;
            }
            auto it = old.find(k);
            if (it == old.end())
                return false;
            out = it->second;
        }
        store(k, out);
        return true;
    }

    void store(const Key& k, const mpz_class& v) const
    {
        std::unique_lock lock(mutex);
        if (young.size() >= std::max<std::size_t>(1, max_entries / 2)) {
            old = std::move(young);
            young = {};
        }
        young.emplace(k, v);
    }

    mpz_class rec(std::size_t idx, Residual& r) const
    {
        if (idx == summand.size()) {
            for (int i = 0; i < n; ++i)
                if (r[static_cast<std::size_t>(i)] != 0)
                    return 0;
            return 1;
        }
        if (!feasible(idx, r))
            return 0;
        if (last_in_group[idx]) {
            // A multiple of e_i (or 2e_i) alone clears coordinate i.
            const auto i = static_cast<std::size_t>(lead[idx]);
            const int saved = r[i];
            if (saved % long_multiple != 0)
                return 0;
            r[i] = 0;
            mpz_class v = rec(idx + 1, r);
            r[i] = saved;
            return v;
        }
        const Key k = key(idx, r);
        mpz_class result;
        if (lookup(k, result))
            return result;
        result = rec(idx + 1, r);
        const Residual& a = summand[idx];
        for (int i = 0; i < n; ++i)
            r[static_cast<std::size_t>(i)] -= a[static_cast<std::size_t>(i)];
        if (feasible(idx, r))
            result += rec(idx, r);
        for (int i = 0; i < n; ++i)
            r[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)];
        store(k, result);
        return result;
    }
};

KostantCounter::KostantCounter(int rank, KostantKind kind, std::size_t max_entries)
{
    if (rank < 0 || rank > kMaxRank)
        throw DomainError("Kostant partition functions support rank 0.." + std::to_string(kMaxRank));
    impl_ = std::make_unique<Impl>(rank, kind, max_entries);
}

KostantCounter::~KostantCounter() = default;

int KostantCounter::rank() const { return impl_->n; }
KostantKind KostantCounter::kind() const { return impl_->kind; }

mpz_class KostantCounter::count(const Weight& mu) const
{
    if (mu.rank() != impl_->n)
        throw DomainError("rank mismatch: counter has rank " + std::to_string(impl_->n) + ", weight is " +
                          mu.str());
    Residual r{};
    for (int i = 0; i < impl_->n; ++i) {
        if (std::abs(mu[i]) > kMaxEntry)
            throw DomainError("weight entry out of range for partition counting: " + mu.str());
        r[static_cast<std::size_t>(i)] = mu[i];
    }
    return impl_->rec(0, r);
}

std::size_t KostantCounter::cached_entries() const
{
    std::shared_lock lock(impl_->mutex);
    return impl_->young.size() + impl_->old.size();
}

void KostantCounter::clear() const
{
    std::unique_lock lock(impl_->mutex);
    impl_->young.clear();
    impl_->old.clear();
}

void set_kostant_cache_bytes(std::size_t bytes) { g_cache_bytes.store(bytes); }
std::size_t kostant_cache_bytes() { return g_cache_bytes.load(); }

const KostantCounter& kostant_counter(int rank, KostantKind kind)
{
    static std::mutex registry_mutex;
    static std::map<std::pair<int, KostantKind>, std::unique_ptr<KostantCounter>> registry;
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[{rank, kind}];
    if (!slot)
        slot = std::make_unique<KostantCounter>(rank, kind, kostant_cache_bytes() / kKostantEntryBytes);
    return *slot;
}

mpz_class kostant_p(const Weight& mu) { return kostant_counter(mu.rank(), KostantKind::p).count(mu); }

mpz_class kostant_p_exotic(const Weight& mu)
{
    return kostant_counter(mu.rank(), KostantKind::p_exotic).count(mu);
}

bool subset_identity_check(const Weight& mu)
{
    const int n = mu.rank();
    if (n > 20)
        throw DomainError("subset identity: rank too large to enumerate subsets");
    mpz_class rhs = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        Weight shifted = mu;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1u)
                shifted[i] -= 1;
        rhs += kostant_p(shifted);
    }
    return kostant_p_exotic(mu) == rhs;
}

} // namespace exotic
