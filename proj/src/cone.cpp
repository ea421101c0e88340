#include "exotic/cone.hpp"

#include "exotic/errors.hpp"

namespace exotic {

bool in_nonnegative_cone(const std::vector<std::vector<mpq_class>>& generators,
                         const std::vector<mpq_class>& target)
{
    const std::size_t rows = target.size();
    const std::size_t gens = generators.size();
    for (const auto& g : generators)
        if (g.size() != rows)
            throw DomainError("cone generator dimension mismatch");
    if (rows == 0)
        return true;

    // Columns: generators, then one artificial per row, then the right-hand side.
    const std::size_t cols = gens + rows + 1;
    const std::size_t rhs = cols - 1;
    std::vector<std::vector<mpq_class>> t(rows + 1, std::vector<mpq_class>(cols));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const int flip = target[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < gens; ++j)
            t[i][j] = flip * generators[j][i];
        t[i][gens + i] = 1;
        t[i][rhs] = flip * target[i];
        basis[i] = gens + i;
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    auto& cost = t[rows];
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < gens; ++j)
            cost[j] -= t[i][j];
    for (std::size_t i = 0; i < rows; ++i)
        cost[rhs] -= t[i][rhs];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < rhs; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;

        std::size_t leave = rows;
        mpq_class best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0)
                continue;
            mpq_class ratio = t[i][rhs] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows)
            break; // unbounded direction; cannot happen for a phase-one objective bounded below by 0

        const mpq_class piv = t[leave][enter];
        for (auto& x : t[leave])
            x /= piv;
        for (std::size_t i = 0; i <= rows; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            const mpq_class factor = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j)
                t[i][j] -= factor * t[leave][j];
        }
        basis[leave] = enter;
    }
    return cost[rhs] == 0;
}

} // namespace exotic
