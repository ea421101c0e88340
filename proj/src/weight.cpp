#include "exotic/weight.hpp"

#include "exotic/errors.hpp"

#include <cstdlib>
#include <numeric>

namespace exotic {

Weight Weight::unit(int rank, int index)
{
    Weight w = zero(rank);
    w[index] = 1;
    return w;
}

int Weight::l1() const
{
    int s = 0;
    for (int c : coords_)
        s += std::abs(c);
    return s;
}

int Weight::total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

long long Weight::norm2() const { return dot(*this, *this); }

Weight& Weight::operator+=(const Weight& other)
{
    if (other.rank() != rank())
        throw DomainError("rank mismatch: " + str() + " vs " + other.str());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other)
{
    if (other.rank() != rank())
        throw DomainError("rank mismatch: " + str() + " vs " + other.str());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

std::string Weight::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(coords_[i]);
    }
    return s + ")";
}

long long dot(const Weight& a, const Weight& b)
{
    if (a.rank() != b.rank())
        throw DomainError("rank mismatch in inner product");
    long long s = 0;
    for (int i = 0; i < a.rank(); ++i)
        s += static_cast<long long>(a[i]) * b[i];
    return s;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int c : w.coords()) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
        h *= 1099511628211ull;
    }
    return h;
}

DoubledWeight::DoubledWeight(std::vector<int> coords2) : coords2_(std::move(coords2))
{
    for (std::size_t i = 1; i < coords2_.size(); ++i)
        if ((coords2_[i] - coords2_[0]) % 2 != 0)
            throw DomainError("doubled weight entries must share one parity");
}

DoubledWeight DoubledWeight::of(const Weight& w)
{
    std::vector<int> c(w.vec());
    for (auto& x : c)
        x *= 2;
    return DoubledWeight(std::move(c));
}

DoubledWeight DoubledWeight::shifted(const Weight& w)
{
    std::vector<int> c(w.vec());
    for (auto& x : c)
        x = 2 * x + 1;
    return DoubledWeight(std::move(c));
}

bool DoubledWeight::integral() const { return coords2_.empty() || coords2_[0] % 2 == 0; }

Weight DoubledWeight::halve() const
{
    if (!integral())
        throw DomainError("doubled weight is not integral");
    std::vector<int> c(coords2_);
    for (auto& x : c)
        x /= 2;
    return Weight(std::move(c));
}

Weight DoubledWeight::unshift() const
{
    if (!coords2_.empty() && integral())
        throw DomainError("doubled weight is not theta-shifted");
    std::vector<int> c(coords2_);
    for (auto& x : c)
        x = (x - 1) / 2;
    return Weight(std::move(c));
}

} // namespace exotic
