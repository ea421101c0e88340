#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace exotic {

using RatVector = std::vector<mpq_class>;

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    RatVector row(std::size_t r) const;
    RatVector col(std::size_t c) const;

    RatMatrix transpose() const;
    RatMatrix pow(unsigned k) const;
    bool is_zero() const;
    std::size_t rank() const;
    mpq_class determinant() const;
    /// DomainError when singular.
    RatMatrix inverse() const;
    /// Basis of {z : A z = 0}.
    std::vector<RatVector> nullspace() const;
    /// Reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref_in_place();

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatVector operator*(const RatMatrix& a, const RatVector& v);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const mpq_class& k, RatMatrix a);
    bool operator==(const RatMatrix& other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

bool is_zero(const RatVector& v);

/// Linear subspace of Q^dim, stored as the nonzero rows of a reduced row
/// echelon basis so that equal subspaces compare equal.
class Subspace {
  public:
    Subspace() = default;
    static Subspace zero(std::size_t dim);
    static Subspace full(std::size_t dim);
    static Subspace span(std::size_t dim, const std::vector<RatVector>& vectors);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RatVector>& basis() const { return basis_; }

    bool contains(const RatVector& v) const;
    bool contains(const Subspace& other) const;
    /// Orthogonal complement for the standard dot product.
    Subspace annihilator() const;
    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// x(U).
    Subspace image(const RatMatrix& x) const;
    /// {w : x w in U}.
    Subspace preimage(const RatMatrix& x) const;
    /// {w : <w, u> = 0 for all u in U} for the form with Gram matrix omega.
    Subspace perp(const RatMatrix& omega) const;
    bool stable_under(const RatMatrix& x) const;

    /// Canonical text form, usable as a hash key.
    std::string key() const;

    bool operator==(const Subspace& other) const = default;

  private:
    std::size_t ambient_ = 0;
    std::vector<RatVector> basis_;
};

} // namespace exotic
