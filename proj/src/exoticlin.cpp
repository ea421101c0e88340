#include "exotic/exoticlin.hpp"

#include "exotic/errors.hpp"

#include <random>
#include <unordered_map>

namespace exotic {

namespace {

Partition partition_from_ranks(const std::vector<std::size_t>& ranks)
{
    // ranks[k] = rank of x^k on the space; parts >= k number ranks[k-1] - ranks[k].
    std::vector<int> parts;
    for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
        const std::size_t at_least_k = ranks[k - 1] - ranks[k];
        const std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = at_least_next; c < at_least_k; ++c)
            parts.push_back(static_cast<int>(k));
    }
    return Partition(std::move(parts));
}

RatMatrix require_form(const ExoticPair& pair)
{
    if (pair.space)
        return pair.space->omega;
    auto solved = solve_compatible_form(pair.x);
    if (!solved)
        throw DomainError("x preserves no symplectic form in the required sense");
    return solved->omega;
}

bool isotropic(const Subspace& s, const RatMatrix& omega) { return s.perp(omega).contains(s); }

} // namespace

void SymplecticSpace::validate() const
{
    const auto d = dim();
    if (omega.rows() != d || omega.cols() != d)
        throw DomainError("symplectic form must be " + std::to_string(d) + "x" + std::to_string(d));
    if (!(omega.transpose() == (mpq_class(-1) * omega)))
        throw DomainError("symplectic form must be antisymmetric");
    if (omega.rank() != d)
        throw DomainError("symplectic form must be invertible");
}

SymplecticSpace standard_form(int n)
{
    if (n < 1)
        throw DomainError("standard symplectic form needs n >= 1");
    const auto d = static_cast<std::size_t>(2 * n);
    SymplecticSpace s;
    s.n = n;
    s.omega = RatMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        s.omega(i, d - 1 - i) = i < static_cast<std::size_t>(n) ? 1 : -1;
    return s;
}

void ExoticPair::validate_shape() const
{
    if (v.size() % 2 != 0)
        throw DomainError("v must have even length 2n");
    if (x.rows() != v.size() || x.cols() != v.size())
        throw DomainError("x must be a square matrix matching the length of v");
    if (space) {
        if (space->dim() != v.size())
            throw DomainError("symplectic form dimension does not match v");
        space->validate();
    }
}

bool is_nilpotent(const RatMatrix& x)
{
    if (!x.square())
        return false;
    RatMatrix p = x;
    std::size_t prev = x.rows() + 1;
    for (;;) {
        const std::size_t r = p.rank();
        if (r == 0)
            return true;
        if (r == prev)
            return false;
        prev = r;
        p = p * x;
    }
}

bool is_exotic_endomorphism(const RatMatrix& x, const RatMatrix& omega)
{
    return x.transpose() * omega == omega * x;
}

std::optional<SymplecticSpace> solve_compatible_form(const RatMatrix& x)
{
    if (!x.square() || x.rows() % 2 != 0 || x.rows() == 0)
        return std::nullopt;
    const std::size_t d = x.rows();
    const std::size_t unknowns = d * d;
    auto var = [d](std::size_t i, std::size_t j) { return i * d + j; };

    // Omega antisymmetric: O_ij + O_ji = 0 (i <= j). Compatibility: (x^T O - O x)_ij = 0.
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            RatVector r(unknowns);
            r[var(i, j)] += 1;
            r[var(j, i)] += 1;
            rows.push_back(std::move(r));
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            RatVector r(unknowns);
            for (std::size_t k = 0; k < d; ++k) {
                r[var(k, j)] += x(k, i);
                r[var(i, k)] -= x(k, j);
            }
            rows.push_back(std::move(r));
        }
    const auto basis = RatMatrix::from_rows(rows, unknowns).nullspace();
    if (basis.empty())
        return std::nullopt;

    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatMatrix omega(d, d);
        for (const auto& b : basis) {
            const mpq_class c = attempt == 0 ? mpq_class(1) : mpq_class(coeff(rng));
            if (c == 0)
                continue;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    omega(i, j) += c * b[var(i, j)];
        }
        if (omega.rank() == d) {
            SymplecticSpace s;
            s.n = static_cast<int>(d / 2);
            s.omega = std::move(omega);
            return s;
        }
    }
    return std::nullopt;
}

bool in_exotic_cone(const ExoticPair& pair)
{
    pair.validate_shape();
    if (!is_nilpotent(pair.x))
        return false;
    if (pair.space)
        return is_exotic_endomorphism(pair.x, pair.space->omega);
    return solve_compatible_form(pair.x).has_value();
}

std::vector<RatMatrix> centralizer_basis(const RatMatrix& x)
{
    if (!x.square())
        throw DomainError("centralizer of a non-square matrix");
    const std::size_t d = x.rows();
    const std::size_t unknowns = d * d;
    // Row (i,j) of xy - yx: sum_k x_ik y_kj - y_ik x_kj.
    RatMatrix map(unknowns, unknowns);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                map(i * d + j, k * d + j) += x(i, k);
                map(i * d + j, i * d + k) -= x(k, j);
            }
    std::vector<RatMatrix> out;
    for (const auto& z : map.nullspace()) {
        RatMatrix y(d, d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                y(a, b) = z[a * d + b];
        out.push_back(std::move(y));
    }
    return out;
}

Subspace exv_module(const RatMatrix& x, const RatVector& v)
{
    std::vector<RatVector> images;
    for (const auto& y : centralizer_basis(x))
        images.push_back(y * v);
    return Subspace::span(v.size(), images);
}

Partition jordan_type(const RatMatrix& x, const Subspace& sub)
{
    if (!sub.stable_under(x))
        throw DomainError("subspace is not x-stable");
    std::vector<std::size_t> ranks{sub.dim()};
    Subspace cur = sub;
    while (cur.dim() > 0) {
        Subspace next = cur.image(x);
        if (next.dim() == cur.dim())
            throw DomainError("x is not nilpotent on the subspace");
        cur = std::move(next);
        ranks.push_back(cur.dim());
    }
    return partition_from_ranks(ranks);
}

Partition jordan_type_quotient(const RatMatrix& x, const Subspace& sub)
{
    if (!sub.stable_under(x))
        throw DomainError("subspace is not x-stable");
    const std::size_t base = sub.dim();
    std::vector<std::size_t> ranks{sub.ambient() - base};
    Subspace cur = Subspace::full(sub.ambient());
    while (ranks.back() > 0) {
        Subspace next = cur.image(x) + sub;
        if (next.dim() == cur.dim())
            throw DomainError("x is not nilpotent on the quotient");
        cur = std::move(next);
        ranks.push_back(cur.dim() - base);
    }
    return partition_from_ranks(ranks);
}

Partition de_double(const Partition& doubled)
{
    const auto& parts = doubled.parts();
    if (parts.size() % 2 != 0)
        throw NotDoubled("partition (" + doubled.str() + ") has an odd number of parts");
    std::vector<int> half;
    for (std::size_t i = 0; i < parts.size(); i += 2) {
        if (parts[i] != parts[i + 1])
            throw NotDoubled("partition (" + doubled.str() + ") is not of the form lambda ∪ lambda");
        half.push_back(parts[i]);
    }
    return Partition(std::move(half));
}

Bipartition orbit_of(const ExoticPair& pair)
{
    pair.validate_shape();
    if (!is_nilpotent(pair.x))
        throw DomainError("x is not nilpotent");
    if (pair.space && !is_exotic_endomorphism(pair.x, pair.space->omega))
        throw DomainError("x does not satisfy <xw, w> = 0 for the supplied form");
    const Subspace e = exv_module(pair.x, pair.v);
    return {de_double(jordan_type(pair.x, e)), de_double(jordan_type_quotient(pair.x, e))};
}

ExoticPair representative(const Bipartition& b)
{
    const int n = b.size();
    const auto d = static_cast<std::size_t>(2 * n);
    ExoticPair pair;
    pair.v = RatVector(d);
    pair.x = RatMatrix(d, d);
    SymplecticSpace space;
    space.n = n;
    space.omega = RatMatrix(d, d);

    // Each pair index i carries two Jordan blocks a_1..a_m and b_1..b_m of size
    // m = mu_i + nu_i with x a_k = a_{k-1}, <a_k, b_l> = [k + l = m + 1], and v
    // picks up a_{mu_i}.
    std::size_t offset = 0;
    const int pairs = std::max(b.mu.length(), b.nu.length());
    for (int i = 0; i < pairs; ++i) {
        const auto m = static_cast<std::size_t>(b.mu[i] + b.nu[i]);
        const std::size_t a0 = offset, b0 = offset + m;
        for (std::size_t k = 1; k < m; ++k) {
            pair.x(a0 + k - 1, a0 + k) = 1;
            pair.x(b0 + k - 1, b0 + k) = 1;
        }
        for (std::size_t k = 1; k <= m; ++k) {
            const std::size_t l = m + 1 - k;
            space.omega(a0 + k - 1, b0 + l - 1) = 1;
            space.omega(b0 + l - 1, a0 + k - 1) = -1;
        }
        if (b.mu[i] > 0)
            pair.v[a0 + static_cast<std::size_t>(b.mu[i]) - 1] = 1;
        offset += 2 * m;
    }
    pair.space = std::move(space);

    if (n > 0 && !in_exotic_cone(pair))
        throw SelfCheckFailed("representative for " + b.label() + " is not in the exotic nilpotent cone");
    const Bipartition back = n > 0 ? orbit_of(pair) : Bipartition{};
    if (back != b)
        throw SelfCheckFailed("representative for " + b.label() + " classifies as " + back.label());
    return pair;
}

Subspace IsotropicFiltration::at(int a) const
{
    if (auto it = levels.find(a); it != levels.end())
        return it->second;
    if (levels.empty() || a > levels.rbegin()->first)
        return a >= 1 ? Subspace::zero(space.dim()) : Subspace::full(space.dim());
    return Subspace::full(space.dim());
}

bool verify_adapted(const IsotropicFiltration& filt, const ExoticPair& pair, const Bipartition& b)
{
    pair.validate_shape();
    const RatMatrix& omega = filt.space.omega;
    if (filt.space.dim() != pair.v.size() || b.size() != pair.n())
        return false;
    const FiltrationProfile profile = filtration_dims(b);
    const int lo = std::min(profile.min_level(), filt.levels.empty() ? 0 : filt.levels.begin()->first) - 1;
    const int hi = std::max(profile.max_level(), filt.levels.empty() ? 0 : filt.levels.rbegin()->first) + 1;
    for (int a = lo; a <= hi; ++a) {
        const Subspace here = filt.at(a);
        if (static_cast<int>(here.dim()) != profile.at(a))
            return false;
        if (!filt.at(a - 1).contains(here))
            return false;
        if (!(here.perp(omega) == filt.at(1 - a)))
            return false;
        if (!filt.at(a + 2).contains(here.image(pair.x)))
            return false;
    }
    return filt.at(1).contains(pair.v);
}

IsotropicFiltration adapted_filtration(const ExoticPair& pair, int closure_depth, AdaptedSearchStats* stats)
{
    pair.validate_shape();
    if (closure_depth < 0)
        throw DomainError("closure_depth must be nonnegative");
    const Bipartition b = orbit_of(pair);
    SymplecticSpace space;
    space.n = pair.n();
    space.omega = require_form(pair);
    if (pair.space)
        space = *pair.space;
    const RatMatrix& omega = space.omega;
    const RatMatrix& x = pair.x;
    const std::size_t d = pair.v.size();
    const FiltrationProfile profile = filtration_dims(b);

    std::unordered_map<std::string, std::size_t> index;
    std::vector<Subspace> lattice;
    std::vector<std::size_t> frontier;
    auto add = [&](Subspace s, std::vector<std::size_t>& sink) {
        auto [it, inserted] = index.emplace(s.key(), lattice.size());
        if (inserted) {
            sink.push_back(lattice.size());
            lattice.push_back(std::move(s));
        }
    };

    add(Subspace::zero(d), frontier);
    add(Subspace::full(d), frontier);
    add(Subspace::span(d, {pair.v}), frontier);
    add(exv_module(x, pair.v), frontier);
    {
        RatMatrix power = x;
        for (std::size_t k = 1; k <= d; ++k) {
            add(Subspace::span(d, [&] {
                    std::vector<RatVector> cols;
                    for (std::size_t c = 0; c < d; ++c)
                        cols.push_back(power.col(c));
                    return cols;
                }()),
                frontier);
            add(Subspace::span(d, power.nullspace()), frontier);
            if (power.is_zero())
                break;
            power = power * x;
        }
    }

    int rounds = 0;
    for (; rounds < closure_depth && !frontier.empty(); ++rounds) {
        std::vector<std::size_t> next;
        const std::size_t known = lattice.size();
        for (std::size_t f : frontier) {
            add(lattice[f].perp(omega), next);
            add(lattice[f].image(x), next);
            add(lattice[f].preimage(x), next);
            for (std::size_t g = 0; g < known; ++g) {
                if (g == f)
                    continue;
                add(lattice[f] + lattice[g], next);
                add(lattice[f].intersect(lattice[g]), next);
            }
        }
        frontier = std::move(next);
    }

    // Levels a >= 1 determine the rest through perp duality.
    const int top = profile.max_level();
    std::map<int, std::vector<const Subspace*>> candidates;
    for (int a = 1; a <= top; ++a) {
        const auto want = static_cast<std::size_t>(profile.at(a));
        for (const auto& s : lattice) {
            if (s.dim() != want || !s.stable_under(x) || !isotropic(s, omega))
                continue;
            if (a == 1 && !s.contains(pair.v))
                continue;
            candidates[a].push_back(&s);
        }
    }

    std::size_t solutions = 0;
    std::optional<IsotropicFiltration> found;
    std::map<int, const Subspace*> chosen;
    const Subspace zero = Subspace::zero(d);
    auto level = [&](int a) -> const Subspace& { return a > top ? zero : *chosen.at(a); };
    auto rec = [&](auto&& self, int a) -> void {
        if (solutions > 1)
            return;
        if (a == 0) {
            IsotropicFiltration filt;
            filt.space = space;
            for (int k = 1; k <= top; ++k)
                filt.levels[k] = level(k);
            for (int k = 1 - top; k <= 0; ++k)
                filt.levels[k] = level(1 - k).perp(omega);
            if (verify_adapted(filt, pair, b)) {
                ++solutions;
                if (!found)
                    found = std::move(filt);
            }
            return;
        }
        for (const Subspace* c : candidates[a]) {
            if (!c->contains(level(a + 1)))
                continue;
            if (!level(a + 2).contains(c->image(x)))
                continue;
            chosen[a] = c;
            self(self, a - 1);
        }
        chosen.erase(a);
    };
    rec(rec, top);

    if (stats) {
        stats->rounds = rounds;
        stats->lattice_size = lattice.size();
        stats->solutions = solutions;
    }
    if (solutions == 0)
        throw NotFound("no C-adapted filtration among " + std::to_string(lattice.size()) +
                       " subspaces after closure_depth=" + std::to_string(rounds) + " rounds for " + b.label());
    if (solutions > 1)
        throw NotUnique("several C-adapted filtrations found for " + b.label());
    return *found;
}

RatMatrix random_symplectic(const SymplecticSpace& space, std::uint64_t seed, int count)
{
    const std::size_t d = space.dim();
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (d + 1)));
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    RatMatrix g = RatMatrix::identity(d);
    for (int t = 0; t < count; ++t) {
        RatVector u(d);
        for (auto& c : u) {
            c = mpq_class(num(rng), den(rng));
            c.canonicalize();
        }
        if (is_zero(u))
            continue;
        // t_u = I + u (omega u)^T
        const RatVector ou = space.omega * u;
        RatMatrix tu = RatMatrix::identity(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                tu(i, j) += u[i] * ou[j];
        g = tu * g;
    }
    return g;
}

ExoticPair conjugate(const ExoticPair& pair, const RatMatrix& g)
{
    ExoticPair out;
    out.space = pair.space;
    out.v = g * pair.v;
    out.x = g * pair.x * g.inverse();
    return out;
}

} // namespace exotic
