#pragma once

// Multiplicities of irreducible Sp(2n)-modules in the global sections of a
// dominant line bundle O(lambda) on the exotic Springer resolution.
//
// Route A evaluates the alternating Weyl sum of the exotic partition function
// p'. Route B expands p' by the subset identity and reads the result off
// ordinary weight multiplicities (Freudenthal). Higher cohomology of dominant
// line bundles vanishes, so route A is an Euler characteristic that must come
// out nonnegative; a negative value raises InternalError.
//
// In the derived-category picture these sheaves carry a cohomological shift
// by d = dim(N)/2 = n^2. It is bookkeeping only and never enters a multiplicity.

#include "exotic/weight.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exotic {

struct SectionMultiplicity {
    Weight mu;
    Weight lambda;
    mpz_class value;
};

/// dim Hom_G(V_mu, H^0(O(lambda))) by route A. Both weights must be dominant.
SectionMultiplicity h0_mult(const Weight& mu, const Weight& lambda);

/// The same number by route B: sum over S of m_mu^{lambda + e_S}.
mpz_class h0_mult_subsets(const Weight& mu, const Weight& lambda);

/// Nonzero h0_mult(mu, lambda) for every dominant mu with |mu|_1 <= degree_bound.
/// H^0 is infinite-dimensional; the bound only limits which mu are listed and
/// never truncates a multiplicity.
std::map<Weight, mpz_class> h0_decompose(const Weight& lambda, int degree_bound);

/// Dominant weights of the given rank with coordinate sum exactly `total`.
std::vector<Weight> dominant_shell(int rank, int total);


struct SweepCell {
    Weight mu;
    Weight lambda;
    std::optional<mpz_class> route_a; ///< empty when route A raised
    mpz_class route_b;
    bool in_conv;
    std::vector<std::string> violations;
};

struct SweepReport {
    int rank = 0;
    int bound = 0;
    std::vector<SweepCell> cells;

    std::size_t violation_count() const;
};

/// Checks route agreement, nonnegativity, conv support and h0(lambda, lambda) = 1
/// on every pair of dominant weights with |.|_1 <= bound. Cells are spread over
/// `threads` workers; the report order is deterministic.
SweepReport sweep_grid(int rank, int bound, int threads);

} // namespace exotic
