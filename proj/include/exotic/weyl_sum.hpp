#pragma once

#include "exotic/weight.hpp"

#include <functional>

namespace exotic {

/// Calls term(sgn(w), w(a) - b) for every w in W(C_n) whose argument lies in the
/// cone of nonnegative prefix sums. Every Kostant-type partition function
/// vanishes off that cone, so the skipped terms contribute zero.
void for_each_cone_term(const Weight& a, const Weight& b,
                        const std::function<void(int sign, const Weight& arg)>& term);

} // namespace exotic
