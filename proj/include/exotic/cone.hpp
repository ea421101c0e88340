#pragma once

#include <gmpxx.h>

#include <vector>

namespace exotic {

/// Exact linear feasibility: is target a nonnegative real combination of the
/// given generators? Solved by a phase-one simplex over the rationals with
/// Bland's rule, so it always terminates.
bool in_nonnegative_cone(const std::vector<std::vector<mpq_class>>& generators,
                         const std::vector<mpq_class>& target);

} // namespace exotic
