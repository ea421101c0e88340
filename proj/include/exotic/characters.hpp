#pragma once

#include "exotic/weight.hpp"

#include <gmpxx.h>

#include <map>

namespace exotic {

/// Nonzero weight multiplicities of the irreducible module with highest weight `highest`.
struct WeightMultiplicityTable {
    Weight highest;
    std::map<Weight, mpz_class> entries;

    mpz_class at(const Weight& lambda) const;
    mpz_class total() const;
};

/// m_mu^lambda as the alternating Weyl sum of the type-C Kostant partition function.
mpz_class weight_mult(const Weight& mu, const Weight& lambda);

/// m_mu^lambda by Freudenthal's recursion. Shares no code with weight_mult
/// beyond the weight arithmetic; tables are memoised per mu.
mpz_class weight_mult_oracle(const Weight& mu, const Weight& lambda);
const WeightMultiplicityTable& freudenthal_table(const Weight& mu);

/// Weyl dimension formula.
mpz_class weyl_dim(const Weight& mu);

/// Every weight with nonzero multiplicity, computed on dominant weights by the
/// Kostant route and spread over W-orbits.
WeightMultiplicityTable all_weights(const Weight& mu);

} // namespace exotic
