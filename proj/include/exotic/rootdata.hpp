#pragma once

#include "exotic/weight.hpp"

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace exotic {

/// Element of the hyperoctahedral group W(C_n), acting by
/// (w x)_{perm[i]} = signs[i] * x_i. Indices are 0-based.
class SignedPermutation {
  public:
    SignedPermutation() = default;
    /// Throws DomainError unless perm is a bijection of {0..n-1} and signs are ±1.
    SignedPermutation(std::vector<int> perm, std::vector<int> signs);

    static SignedPermutation identity(int rank);
    static SignedPermutation sign_flip(int rank, int slot);
    static SignedPermutation transposition(int rank, int i, int j);

    int rank() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }

    /// Determinant of the signed permutation matrix.
    int sgn() const;
    Weight act(const Weight& x) const;
    DoubledWeight act(const DoubledWeight& x) const;
    /// w(x + theta) - theta.
    Weight twisted_act(const Weight& x) const;
    /// (*this ∘ other)(x) = this->act(other.act(x)).
    SignedPermutation compose(const SignedPermutation& other) const;
    SignedPermutation inverse() const;

    auto operator<=>(const SignedPermutation&) const = default;
    bool operator==(const SignedPermutation&) const = default;

  private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

/// Every element of W(C_n); 2^n n! of them, so only sensible for small n.
std::vector<SignedPermutation> weyl_group(int rank);

/// Root data of type C_n together with the weights of the exotic
/// representation V ⊕ s and its positive part.
struct RootDataC {
    int rank = 0;
    std::vector<Weight> positive_roots; ///< e_i - e_j, e_i + e_j (i<j), 2e_i
    std::vector<Weight> exotic_weights; ///< e_i - e_j, e_i + e_j (i<j), e_i
    std::vector<Weight> u_weights;      ///< equal to positive_roots
    DoubledWeight rho;                  ///< 2 * (n, n-1, ..., 1)
    DoubledWeight theta;                ///< 2 * (1/2, ..., 1/2)
    Weight canonical_weight;            ///< (-1, ..., -1), the canonical bundle

    static RootDataC of(int rank);
};

/// rho = (n, n-1, ..., 1) as an integral weight.
Weight rho(int rank);

bool is_dominant(const Weight& lambda);
/// Weakly decreasing, strictly positive entries.
bool is_strictly_dominant(const Weight& lambda);

/// The dominant weight in the W-orbit of lambda and the w with w(lambda) = it.
/// Among valid w, perm is lexicographically smallest and signs flip only negative entries.
std::pair<Weight, SignedPermutation> dominant_rep(const Weight& lambda);
DoubledWeight dominant_rep(const DoubledWeight& lambda);

Weight twisted_w0(const Weight& lambda);

/// Borel-Weil-Bott regularisation: none when lambda + rho is singular,
/// otherwise sgn(w) and w(lambda + rho) - rho for the w making it dominant.
struct BwbResult {
    int sign;
    Weight weight;
    bool operator==(const BwbResult&) const = default;
};
std::optional<BwbResult> bwb(const Weight& lambda);

/// lambda in the convex hull of W mu. mu must be dominant (DomainError otherwise).
bool in_conv(const Weight& lambda, const Weight& mu);
/// in_conv and lambda not in the W-orbit of mu.
bool in_conv0(const Weight& lambda, const Weight& mu);
/// lambda + theta in the convex hull of W(mu + theta); the twisted-action hull.
bool in_tconv(const Weight& lambda, const Weight& mu);
bool in_tconv0(const Weight& lambda, const Weight& mu);

/// Every dominant weight nu with nu <= mu, i.e. in the hull of W mu.
std::vector<Weight> dominant_weights_below(const Weight& mu);

std::vector<Weight> weyl_orbit(const Weight& mu);

/// 2 (lambda, alpha) / (alpha, alpha); DomainError when alpha = 0.
mpq_class coroot_pairing(const Weight& lambda, const Weight& alpha);

/// Sort dominant weights by |lambda + theta|^2 then lexicographically. The result
/// is a linear extension of the twisted-hull containment order.
std::vector<Weight> quasi_order(std::vector<Weight> weights);

} // namespace exotic
