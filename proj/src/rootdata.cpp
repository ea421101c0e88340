#include "exotic/rootdata.hpp"

#include "exotic/cone.hpp"
#include "exotic/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

namespace exotic {

namespace {

int permutation_sign(const std::vector<int>& perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                sign = -sign;
    return sign;
}

template <class Vec>
Vec apply_signed(const std::vector<int>& perm, const std::vector<int>& signs, std::span<const int> x)
{
    if (x.size() != perm.size())
        throw DomainError("rank mismatch in Weyl group action");
    std::vector<int> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[static_cast<std::size_t>(perm[i])] = signs[i] * x[i];
    return Vec(std::move(out));
}

std::vector<mpq_class> to_rational(const Weight& w)
{
    std::vector<mpq_class> out;
    out.reserve(w.coords().size());
    for (int c : w.coords())
        out.emplace_back(c);
    return out;
}

bool in_root_cone(const Weight& diff)
{
    const RootDataC data = RootDataC::of(diff.rank());
    std::vector<std::vector<mpq_class>> gens;
    gens.reserve(data.positive_roots.size());
    for (const auto& root : data.positive_roots)
        gens.push_back(to_rational(root));
    return in_nonnegative_cone(gens, to_rational(diff));
}

void require_dominant(const Weight& mu, const char* what)
{
    if (!is_dominant(mu))
        throw DomainError(std::string(what) + " must be dominant, got " + mu.str());
}

} // namespace

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs))
{
    if (perm_.size() != signs_.size())
        throw DomainError("signed permutation: perm and signs differ in length");
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
        if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(p)])
            throw DomainError("signed permutation: perm is not a bijection");
        seen[static_cast<std::size_t>(p)] = true;
    }
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw DomainError("signed permutation: signs must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(int rank)
{
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    return SignedPermutation(std::move(perm), std::vector<int>(static_cast<std::size_t>(rank), 1));
}

SignedPermutation SignedPermutation::sign_flip(int rank, int slot)
{
    SignedPermutation w = identity(rank);
    w.signs_[static_cast<std::size_t>(slot)] = -1;
    return w;
}

SignedPermutation SignedPermutation::transposition(int rank, int i, int j)
{
    SignedPermutation w = identity(rank);
    std::swap(w.perm_[static_cast<std::size_t>(i)], w.perm_[static_cast<std::size_t>(j)]);
    return w;
}

int SignedPermutation::sgn() const
{
    int sign = permutation_sign(perm_);
    for (int s : signs_)
        sign *= s;
    return sign;
}

Weight SignedPermutation::act(const Weight& x) const { return apply_signed<Weight>(perm_, signs_, x.coords()); }

DoubledWeight SignedPermutation::act(const DoubledWeight& x) const
{
    return apply_signed<DoubledWeight>(perm_, signs_, x.coords2());
}

Weight SignedPermutation::twisted_act(const Weight& x) const { return act(DoubledWeight::shifted(x)).unshift(); }

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const
{
    if (other.rank() != rank())
        throw DomainError("rank mismatch in composition");
    std::vector<int> perm(perm_.size()), signs(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        const auto mid = static_cast<std::size_t>(other.perm_[i]);
        perm[i] = perm_[mid];
        signs[i] = other.signs_[i] * signs_[mid];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

SignedPermutation SignedPermutation::inverse() const
{
    std::vector<int> perm(perm_.size()), signs(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        const auto target = static_cast<std::size_t>(perm_[i]);
        perm[target] = static_cast<int>(i);
        signs[target] = signs_[i];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

std::vector<SignedPermutation> weyl_group(int rank)
{
    std::vector<SignedPermutation> out;
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << rank); ++mask) {
            std::vector<int> signs(static_cast<std::size_t>(rank));
            for (int i = 0; i < rank; ++i)
                signs[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
            out.emplace_back(perm, std::move(signs));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

RootDataC RootDataC::of(int rank)
{
    if (rank < 0)
        throw DomainError("rank must be nonnegative");
    RootDataC d;
    d.rank = rank;
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            d.positive_roots.push_back(Weight::unit(rank, i) - Weight::unit(rank, j));
            d.positive_roots.push_back(Weight::unit(rank, i) + Weight::unit(rank, j));
        }
        d.positive_roots.push_back(2 * Weight::unit(rank, i));
    }
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            d.exotic_weights.push_back(Weight::unit(rank, i) - Weight::unit(rank, j));
            d.exotic_weights.push_back(Weight::unit(rank, i) + Weight::unit(rank, j));
        }
        d.exotic_weights.push_back(Weight::unit(rank, i));
    }
    d.u_weights = d.positive_roots;
    d.rho = DoubledWeight::of(exotic::rho(rank));
    d.theta = DoubledWeight(std::vector<int>(static_cast<std::size_t>(rank), 1));
    d.canonical_weight = Weight::constant(rank, -1);
    return d;
}

Weight rho(int rank)
{
    std::vector<int> c(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
        c[static_cast<std::size_t>(i)] = rank - i;
    return Weight(std::move(c));
}

bool is_dominant(const Weight& lambda)
{
    for (int i = 0; i < lambda.rank(); ++i) {
        if (lambda[i] < 0)
            return false;
        if (i + 1 < lambda.rank() && lambda[i] < lambda[i + 1])
            return false;
    }
    return true;
}

bool is_strictly_dominant(const Weight& lambda)
{
    for (int i = 0; i < lambda.rank(); ++i) {
        if (lambda[i] <= 0)
            return false;
        if (i + 1 < lambda.rank() && lambda[i] <= lambda[i + 1])
            return false;
    }
    return true;
}

std::pair<Weight, SignedPermutation> dominant_rep(const Weight& lambda)
{
    const int n = lambda.rank();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return std::abs(lambda[a]) > std::abs(lambda[b]); });
    std::vector<int> perm(static_cast<std::size_t>(n)), signs(static_cast<std::size_t>(n));
    std::vector<int> dom(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int slot = order[static_cast<std::size_t>(k)];
        perm[static_cast<std::size_t>(slot)] = k;
        dom[static_cast<std::size_t>(k)] = std::abs(lambda[slot]);
    }
    for (int i = 0; i < n; ++i)
        signs[static_cast<std::size_t>(i)] = lambda[i] < 0 ? -1 : 1;
    return {Weight(std::move(dom)), SignedPermutation(std::move(perm), std::move(signs))};
}

DoubledWeight dominant_rep(const DoubledWeight& lambda)
{
    std::vector<int> c(lambda.coords2().begin(), lambda.coords2().end());
    for (auto& x : c)
        x = std::abs(x);
    std::sort(c.begin(), c.end(), std::greater<>());
    return DoubledWeight(std::move(c));
}

Weight twisted_w0(const Weight& lambda) { return -lambda - Weight::constant(lambda.rank(), 1); }

std::optional<BwbResult> bwb(const Weight& lambda)
{
    const Weight r = rho(lambda.rank());
    const Weight shifted = lambda + r;
    auto [dom, w] = dominant_rep(shifted);
    if (!is_strictly_dominant(dom))
        return std::nullopt;
    return BwbResult{w.sgn(), dom - r};
}

bool in_conv(const Weight& lambda, const Weight& mu)
{
    require_dominant(mu, "conv centre");
    if (lambda.rank() != mu.rank())
        throw DomainError("rank mismatch in conv membership");
    return in_root_cone(mu - dominant_rep(lambda).first);
}

bool in_conv0(const Weight& lambda, const Weight& mu)
{
    return in_conv(lambda, mu) && dominant_rep(lambda).first != mu;
}

bool in_tconv(const Weight& lambda, const Weight& mu)
{
    if (lambda.rank() != mu.rank())
        throw DomainError("rank mismatch in twisted conv membership");
    const DoubledWeight top = dominant_rep(DoubledWeight::shifted(mu));
    const DoubledWeight pt = dominant_rep(DoubledWeight::shifted(lambda));
    std::vector<int> diff(static_cast<std::size_t>(mu.rank()));
    for (int i = 0; i < mu.rank(); ++i)
        diff[static_cast<std::size_t>(i)] = top[i] - pt[i];
    return in_root_cone(Weight(std::move(diff)));
}

bool in_tconv0(const Weight& lambda, const Weight& mu)
{
    return in_tconv(lambda, mu) &&
           dominant_rep(DoubledWeight::shifted(lambda)) != dominant_rep(DoubledWeight::shifted(mu));
}

std::vector<Weight> dominant_weights_below(const Weight& mu)
{
    require_dominant(mu, "upper bound");
    const int n = mu.rank();
    std::vector<int> mu_prefix(static_cast<std::size_t>(n));
    std::partial_sum(mu.coords().begin(), mu.coords().end(), mu_prefix.begin());

    std::vector<Weight> out;
    std::vector<int> cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i, int cap, int prefix) -> void {
        if (i == n) {
            out.emplace_back(cur);
            return;
        }
        const int limit = std::min(cap, mu_prefix[static_cast<std::size_t>(i)] - prefix);
        for (int v = limit; v >= 0; --v) {
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v, prefix + v);
        }
    };
    rec(rec, 0, n > 0 ? mu[0] : 0, 0);
    return out;
}

std::vector<Weight> weyl_orbit(const Weight& mu)
{
    std::vector<int> abs_sorted(mu.vec());
    for (auto& x : abs_sorted)
        x = std::abs(x);
    std::sort(abs_sorted.begin(), abs_sorted.end());
    const int n = mu.rank();
    std::vector<Weight> out;
    do {
        std::vector<int> nonzero;
        for (int i = 0; i < n; ++i)
            if (abs_sorted[static_cast<std::size_t>(i)] != 0)
                nonzero.push_back(i);
        for (unsigned mask = 0; mask < (1u << nonzero.size()); ++mask) {
            std::vector<int> c(abs_sorted);
            for (std::size_t k = 0; k < nonzero.size(); ++k)
                if ((mask >> k) & 1u)
                    c[static_cast<std::size_t>(nonzero[k])] *= -1;
            out.emplace_back(std::move(c));
        }
    } while (std::next_permutation(abs_sorted.begin(), abs_sorted.end()));
    std::sort(out.begin(), out.end());
    return out;
}

mpq_class coroot_pairing(const Weight& lambda, const Weight& alpha)
{
    const long long aa = dot(alpha, alpha);
    if (aa == 0)
        throw DomainError("coroot pairing with the zero vector");
    mpq_class r(mpz_class(std::to_string(2 * dot(lambda, alpha))), mpz_class(std::to_string(aa)));
    r.canonicalize();
    return r;
}

std::vector<Weight> quasi_order(std::vector<Weight> weights)
{
    for (const auto& w : weights)
        require_dominant(w, "quasi_order input");
    auto key = [](const Weight& w) {
        long long s = 0;
        for (int c : w.coords())
            s += static_cast<long long>(2 * c + 1) * (2 * c + 1);
        return s;
    };
    std::sort(weights.begin(), weights.end(), [&](const Weight& a, const Weight& b) {
        return std::make_tuple(key(a), std::cref(a)) < std::make_tuple(key(b), std::cref(b));
    });
    return weights;
}

} // namespace exotic
