#include "exotic/rational.hpp"

#include "exotic/errors.hpp"

namespace exotic {

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols)
{
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DomainError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t r) const
{
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t c) const
{
    RatVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RatMatrix RatMatrix::pow(unsigned k) const
{
    if (!square())
        throw DomainError("power of a non-square matrix");
    RatMatrix result = identity(rows_);
    for (unsigned i = 0; i < k; ++i)
        result = result * *this;
    return result;
}

bool RatMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

std::vector<std::size_t> RatMatrix::rref_in_place()
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && (*this)(p, c) == 0)
            ++p;
        if (p == rows_)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(p, j), (*this)(r, j));
        const mpq_class inv = 1 / (*this)(r, c);
        for (std::size_t j = c; j < cols_; ++j)
            (*this)(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || (*this)(i, c) == 0)
                continue;
            const mpq_class f = (*this)(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                (*this)(i, j) -= f * (*this)(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t RatMatrix::rank() const
{
    RatMatrix copy = *this;
    return copy.rref_in_place().size();
}

mpq_class RatMatrix::determinant() const
{
    if (!square())
        throw DomainError("determinant of a non-square matrix");
    RatMatrix a = *this;
    mpq_class det = 1;
    const std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0)
                continue;
            const mpq_class f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

RatMatrix RatMatrix::inverse() const
{
    if (!square())
        throw DomainError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = aug.rref_in_place();
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw DomainError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<RatVector> RatMatrix::nullspace() const
{
    RatMatrix a = *this;
    const auto pivots = a.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<RatVector> out;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        RatVector z(cols_);
        z[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            z[pivots[r]] = -a(r, free);
        out.push_back(std::move(z));
    }
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DomainError("matrix product dimension mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpq_class& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v)
{
    if (a.cols_ != v.size())
        throw DomainError("matrix-vector dimension mismatch");
    RatVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a(i, k) != 0 && v[k] != 0)
                out[i] += a(i, k) * v[k];
    return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DomainError("matrix sum dimension mismatch");
    RatMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] += b.data_[i];
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DomainError("matrix difference dimension mismatch");
    RatMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] -= b.data_[i];
    return c;
}

RatMatrix operator*(const mpq_class& k, RatMatrix a)
{
    for (auto& x : a.data_)
        x *= k;
    return a;
}

bool is_zero(const RatVector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Subspace Subspace::zero(std::size_t dim)
{
    Subspace s;
    s.ambient_ = dim;
    return s;
}

Subspace Subspace::full(std::size_t dim)
{
    Subspace s;
    s.ambient_ = dim;
    for (std::size_t i = 0; i < dim; ++i) {
        RatVector e(dim);
        e[i] = 1;
        s.basis_.push_back(std::move(e));
    }
    return s;
}

Subspace Subspace::span(std::size_t dim, const std::vector<RatVector>& vectors)
{
    Subspace s;
    s.ambient_ = dim;
    if (vectors.empty())
        return s;
    RatMatrix m = RatMatrix::from_rows(vectors, dim);
    const auto pivots = m.rref_in_place();
    for (std::size_t r = 0; r < pivots.size(); ++r)
        s.basis_.push_back(m.row(r));
    return s;
}

bool Subspace::contains(const RatVector& v) const
{
    if (v.size() != ambient_)
        throw DomainError("vector dimension mismatch");
    // Reduce against the echelon basis; each basis row has a leading 1.
    RatVector r = v;
    for (const auto& b : basis_) {
        std::size_t lead = 0;
        while (b[lead] == 0)
            ++lead;
        if (r[lead] == 0)
            continue;
        const mpq_class f = r[lead];
        for (std::size_t j = lead; j < ambient_; ++j)
            r[j] -= f * b[j];
    }
    return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const
{
    for (const auto& b : other.basis_)
        if (!contains(b))
            return false;
    return true;
}

Subspace Subspace::annihilator() const
{
    if (basis_.empty())
        return full(ambient_);
    return span(ambient_, RatMatrix::from_rows(basis_, ambient_).nullspace());
}

Subspace Subspace::operator+(const Subspace& other) const
{
    std::vector<RatVector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const
{
    return (annihilator() + other.annihilator()).annihilator();
}

Subspace Subspace::image(const RatMatrix& x) const
{
    std::vector<RatVector> imgs;
    imgs.reserve(basis_.size());
    for (const auto& b : basis_)
        imgs.push_back(x * b);
    return span(x.rows(), imgs);
}

Subspace Subspace::preimage(const RatMatrix& x) const
{
    const Subspace ann = annihilator();
    if (ann.basis_.empty())
        return full(x.cols());
    const RatMatrix constraints = RatMatrix::from_rows(ann.basis_, ambient_) * x;
    return span(x.cols(), constraints.nullspace());
}

Subspace Subspace::perp(const RatMatrix& omega) const
{
    if (basis_.empty())
        return full(ambient_);
    const RatMatrix constraints = RatMatrix::from_rows(basis_, ambient_) * omega;
    return span(ambient_, constraints.nullspace());
}

bool Subspace::stable_under(const RatMatrix& x) const
{
    for (const auto& b : basis_)
        if (!contains(x * b))
            return false;
    return true;
}

std::string Subspace::key() const
{
    std::string k = std::to_string(ambient_) + ":";
    for (const auto& b : basis_) {
        for (const auto& x : b) {
            k += x.get_str();
            k += ',';
        }
        k += ';';
    }
    return k;
}

} // namespace exotic
