#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace exotic {

/// Integral weight of Sp(2n) written in the epsilon basis.
class Weight {
  public:
    Weight() = default;
    explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<int> coords) : coords_(coords) {}

    static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
    static Weight constant(int rank, int value)
    {
        return Weight(std::vector<int>(static_cast<std::size_t>(rank), value));
    }
    /// The epsilon_i basis vector (0-based index).
    static Weight unit(int rank, int index);

    int rank() const { return static_cast<int>(coords_.size()); }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
    std::span<const int> coords() const { return coords_; }
    const std::vector<int>& vec() const { return coords_; }

    /// Sum of absolute values.
    int l1() const;
    /// Sum of coordinates.
    int total() const;
    /// Squared Euclidean norm with orthonormal epsilon basis.
    long long norm2() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a)
    {
        for (auto& c : a.coords_)
            c = -c;
        return a;
    }
    friend Weight operator*(int k, Weight a)
    {
        for (auto& c : a.coords_)
            c *= k;
        return a;
    }

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

    std::string str() const;

  private:
    std::vector<int> coords_;
};

long long dot(const Weight& a, const Weight& b);

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

/// Twice a (possibly half-integral) weight. All entries share one parity:
/// even for integral weights, odd for integral weights shifted by theta.
class DoubledWeight {
  public:
    DoubledWeight() = default;
    /// Throws DomainError when the entries have mixed parity.
    explicit DoubledWeight(std::vector<int> coords2);

    static DoubledWeight of(const Weight& w);
    /// 2 * (w + theta).
    static DoubledWeight shifted(const Weight& w);

    int rank() const { return static_cast<int>(coords2_.size()); }
    int operator[](int i) const { return coords2_[static_cast<std::size_t>(i)]; }
    std::span<const int> coords2() const { return coords2_; }
    bool integral() const;
    /// Halves back to a Weight; DomainError when not integral.
    Weight halve() const;
    /// The integral weight w with *this == 2 * (w + theta); DomainError when entries are even.
    Weight unshift() const;

    auto operator<=>(const DoubledWeight&) const = default;
    bool operator==(const DoubledWeight&) const = default;

  private:
    std::vector<int> coords2_;
};

} // namespace exotic
