#pragma once

#include "exotic/bipartitions.hpp"
#include "exotic/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace exotic {

/// Q^{2n} with a symplectic Gram matrix omega.
struct SymplecticSpace {
    int n = 0;
    RatMatrix omega;

    /// Throws DomainError unless omega is 2n x 2n, antisymmetric and invertible.
    void validate() const;
    std::size_t dim() const { return static_cast<std::size_t>(2 * n); }
};

/// Antidiagonal form: omega[i][2n-1-i] = 1 for i < n and -1 for i >= n.
SymplecticSpace standard_form(int n);

/// A point (v, x) of the exotic nilpotent cone. The form is optional because
/// orbit classification only needs Jordan data; when present it is checked.
struct ExoticPair {
    std::optional<SymplecticSpace> space;
    RatVector v;
    RatMatrix x;

    int n() const { return static_cast<int>(v.size() / 2); }
    /// Throws DomainError on inconsistent dimensions.
    void validate_shape() const;
};

bool is_nilpotent(const RatMatrix& x);
/// x^T omega == omega x, i.e. <xw, w> = 0 for every w.
bool is_exotic_endomorphism(const RatMatrix& x, const RatMatrix& omega);

/// Some symplectic form omega with x^T omega == omega x, found by solving the
/// linear constraints exactly and testing deterministic integer combinations of
/// the solution basis for invertibility.
std::optional<SymplecticSpace> solve_compatible_form(const RatMatrix& x);

/// Nilpotent x, and the form condition for the attached form (or for a solved one when absent).
bool in_exotic_cone(const ExoticPair& pair);

/// Basis of {y : xy = yx}.
std::vector<RatMatrix> centralizer_basis(const RatMatrix& x);

/// The subspace E^x v spanned by y v over the centralizer of x.
Subspace exv_module(const RatMatrix& x, const RatVector& v);

/// Jordan type of x on an x-stable subspace; DomainError when not stable.
Partition jordan_type(const RatMatrix& x, const Subspace& sub);
/// Jordan type of x on V / sub; DomainError when sub is not x-stable.
Partition jordan_type_quotient(const RatMatrix& x, const Subspace& sub);

/// Inverse of lambda -> lambda ∪ lambda; throws NotDoubled.
Partition de_double(const Partition& doubled);

/// The bipartition indexing the orbit of the pair. Never looks at the form
/// except to validate it when one is attached.
Bipartition orbit_of(const ExoticPair& pair);

/// A point of the orbit for b, with the form it lives in. The result is
/// classified again before returning; a mismatch throws SelfCheckFailed.
ExoticPair representative(const Bipartition& b);

/// A filtration (V_{>=a}); levels outside the stored range are the whole space
/// below and zero above.
struct IsotropicFiltration {
    SymplecticSpace space;
    std::map<int, Subspace> levels;

    Subspace at(int a) const;
};

/// Checks nesting, perp duality, the dimension profile of b, v in V_{>=1} and
/// x V_{>=a} ⊆ V_{>=a+2}. filt.space supplies the form.
bool verify_adapted(const IsotropicFiltration& filt, const ExoticPair& pair, const Bipartition& b);

struct AdaptedSearchStats {
    int rounds = 0;
    std::size_t lattice_size = 0;
    std::size_t solutions = 0;
};

/// The unique C-adapted filtration of the pair, found by closing a seed set of
/// subspaces (0, V, Qv, Im x^k, Ker x^k, E^x v) under sum, intersection, perp,
/// x-image and x-preimage for at most closure_depth rounds and assembling
/// filtrations from members of the right dimensions.
/// Throws NotFound when none is assembled and NotUnique when several are.
IsotropicFiltration adapted_filtration(const ExoticPair& pair, int closure_depth = 4,
                                       AdaptedSearchStats* stats = nullptr);

/// Product of `count` symplectic transvections w -> w + <w,u> u with random
/// rational u; deterministic in (space, seed).
RatMatrix random_symplectic(const SymplecticSpace& space, std::uint64_t seed, int count = 5);

/// (g v, g x g^{-1}) in the same space.
ExoticPair conjugate(const ExoticPair& pair, const RatMatrix& g);

} // namespace exotic
