#pragma once

// Dense matrices over an exact field and the elimination routines the module
// engine is built on. Vectors are column vectors; a "basis" of a subspace is
// a matrix whose columns are the basis vectors.

#include "singquiv/field.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace singquiv {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c)
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    T* row(std::size_t r) { return data_.data() + r * cols_; }
    const T* row(std::size_t r) const { return data_.data() + r * cols_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class F>
using Mat = Matrix<typename F::value_type>;

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
Mat<F> zeros(const F& k, std::size_t rows, std::size_t cols)
{
    return Mat<F>(rows, cols, k.zero());
}

template <class F>
Mat<F> identity(const F& k, std::size_t n)
{
    Mat<F> m = zeros(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = k.one();
    return m;
}

template <class F>
bool is_zero(const F& k, const Mat<F>& a)
{
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!k.is_zero(a(r, c)))
                return false;
    return true;
}

template <class F>
bool equal(const F& k, const Mat<F>& a, const Mat<F>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!k.equal(a(r, c), b(r, c)))
                return false;
    return true;
}

template <class F>
Mat<F> multiply(const F& k, const Mat<F>& a, const Mat<F>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: inner dimensions differ");
    Mat<F> out = zeros(k, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto* orow = out.row(i);
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const auto& x = a(i, l);
            if (k.is_zero(x))
                continue;
            const auto* brow = b.row(l);
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!k.is_zero(brow[j]))
                    orow[j] = k.add(orow[j], k.mul(x, brow[j]));
        }
    }
    return out;
}

template <class F>
Mat<F> add(const F& k, const Mat<F>& a, const Mat<F>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shapes differ");
    Mat<F> out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = k.add(a(r, c), b(r, c));
    return out;
}

template <class F>
Mat<F> subtract(const F& k, const Mat<F>& a, const Mat<F>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: shapes differ");
    Mat<F> out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = k.sub(a(r, c), b(r, c));
    return out;
}

template <class F>
Mat<F> scale(const F& k, const typename F::value_type& s, const Mat<F>& a)
{
    Mat<F> out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = k.mul(s, a(r, c));
    return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a)
{
    if (a.rows() == 0 || a.cols() == 0)
        return Matrix<T>(a.cols(), a.rows(), T{});
    Matrix<T> out(a.cols(), a.rows(), a(0, 0));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(c, r) = a(r, c);
    return out;
}

template <class F>
Mat<F> hstack(const F& k, const std::vector<const Mat<F>*>& blocks, std::size_t rows)
{
    std::size_t cols = 0;
    for (const auto* b : blocks) {
        if (b->rows() != rows)
            throw std::invalid_argument("hstack: row counts differ");
        cols += b->cols();
    }
    Mat<F> out = zeros(k, rows, cols);
    std::size_t off = 0;
    for (const auto* b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < b->cols(); ++c)
                out(r, off + c) = (*b)(r, c);
        off += b->cols();
    }
    return out;
}

template <class F>
Mat<F> hstack(const F& k, const Mat<F>& a, const Mat<F>& b)
{
    return hstack(k, std::vector<const Mat<F>*>{&a, &b}, a.rows());
}

template <class F>
Mat<F> vstack(const F& k, const std::vector<const Mat<F>*>& blocks, std::size_t cols)
{
    std::size_t rows = 0;
    for (const auto* b : blocks) {
        if (b->cols() != cols)
            throw std::invalid_argument("vstack: column counts differ");
        rows += b->rows();
    }
    Mat<F> out = zeros(k, rows, cols);
    std::size_t off = 0;
    for (const auto* b : blocks) {
        for (std::size_t r = 0; r < b->rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out(off + r, c) = (*b)(r, c);
        off += b->rows();
    }
    return out;
}

template <class F>
Mat<F> select_columns(const F& k, const Mat<F>& a, const std::vector<std::size_t>& cols)
{
    Mat<F> out = zeros(k, a.rows(), cols.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(r, j) = a(r, cols[j]);
    return out;
}

template <class F>
Mat<F> select_rows(const F& k, const Mat<F>& a, const std::vector<std::size_t>& rows)
{
    Mat<F> out = zeros(k, rows.size(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(i, c) = a(rows[i], c);
    return out;
}

template <class F>
Vec<F> column(const Mat<F>& a, std::size_t c)
{
    Vec<F> v;
    v.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        v.push_back(a(r, c));
    return v;
}

template <class F>
Mat<F> from_columns(const F& k, const std::vector<Vec<F>>& cols, std::size_t rows)
{
    Mat<F> out = zeros(k, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("from_columns: vector length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            out(r, j) = cols[j][r];
    }
    return out;
}

template <class F>
Vec<F> apply(const F& k, const Mat<F>& a, const Vec<F>& v)
{
    if (a.cols() != v.size())
        throw std::invalid_argument("apply: dimension mismatch");
    Vec<F> out(a.rows(), k.zero());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto* arow = a.row(r);
        auto acc = k.zero();
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!k.is_zero(arow[c]) && !k.is_zero(v[c]))
                acc = k.add(acc, k.mul(arow[c], v[c]));
        out[r] = acc;
    }
    return out;
}

/// Reduced row echelon form together with its pivot columns.
template <class F>
struct Echelon {
    Mat<F> reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. With `full` false only the rows below each pivot
/// are cleared, which is enough for rank and pivot positions.
template <class F>
Echelon<F> row_reduce(const F& k, Mat<F> a, bool full = true)
{
    Echelon<F> out;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!k.is_zero(a(r, c))) {
                piv = r;
                break;
            }
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a(piv, j), a(rank, j));
        auto* prow = a.row(rank);
        const auto inv = k.inv(prow[c]);
        for (std::size_t j = c; j < cols; ++j)
            prow[j] = k.mul(prow[j], inv);
        for (std::size_t r = full ? 0 : rank + 1; r < rows; ++r) {
            if (r == rank)
                continue;
            auto* row = a.row(r);
            if (k.is_zero(row[c]))
                continue;
            const auto f = row[c];
            for (std::size_t j = c; j < cols; ++j)
                if (!k.is_zero(prow[j]))
                    row[j] = k.sub_mul(row[j], f, prow[j]);
        }
        out.pivots.push_back(c);
        ++rank;
    }
    out.reduced = std::move(a);
    return out;
}

template <class F>
std::size_t rank(const F& k, const Mat<F>& a)
{
    if (a.rows() > a.cols())
        return row_reduce(k, transpose(a), false).pivots.size();
    return row_reduce(k, a, false).pivots.size();
}

/// Basis (as columns) of { x : a x = 0 }.
template <class F>
Mat<F> nullspace(const F& k, const Mat<F>& a)
{
    const auto ech = row_reduce(k, a, true);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ech.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Mat<F> basis = zeros(k, n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t f = free_cols[j];
        basis(f, j) = k.one();
        for (std::size_t i = 0; i < ech.pivots.size(); ++i)
            basis(ech.pivots[i], j) = k.neg(ech.reduced(i, f));
    }
    return basis;
}

/// Indices of a maximal linearly independent subset of the columns, chosen greedily left to right.
template <class F>
std::vector<std::size_t> independent_columns(const F& k, const Mat<F>& a)
{
    return row_reduce(k, a, false).pivots;
}

/// Columns of `a` spanning its column space.
template <class F>
Mat<F> column_space(const F& k, const Mat<F>& a)
{
    return select_columns(k, a, independent_columns(k, a));
}

/// Indices of the columns of `extra` that extend span(base) to span(base, extra).
template <class F>
std::vector<std::size_t> complement_columns(const F& k, const Mat<F>& base, const Mat<F>& extra)
{
    const auto piv = independent_columns(k, hstack(k, base, extra));
    std::vector<std::size_t> out;
    for (auto p : piv)
        if (p >= base.cols())
            out.push_back(p - base.cols());
    return out;
}

/// Solution of a x = b, or nullopt when inconsistent.
template <class F>
std::optional<Mat<F>> solve(const F& k, const Mat<F>& a, const Mat<F>& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve: row counts differ");
    const std::size_t n = a.cols();
    const auto ech = row_reduce(k, hstack(k, a, b), true);
    Mat<F> x = zeros(k, n, b.cols());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
        const std::size_t p = ech.pivots[i];
        if (p >= n)
            return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c)
            x(p, c) = ech.reduced(i, n + c);
    }
    return x;
}

template <class F>
std::optional<Mat<F>> inverse(const F& k, const Mat<F>& a)
{
    if (a.rows() != a.cols())
        return std::nullopt;
    const std::size_t n = a.rows();
    const auto ech = row_reduce(k, hstack(k, a, identity(k, n)), true);
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
        return std::nullopt;
    Mat<F> inv = zeros(k, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

/// Coordinates with respect to a fixed basis of a subspace. The basis must
/// have full column rank.
template <class F>
class SpanCoordinates {
public:
    SpanCoordinates() = default;
    SpanCoordinates(const F& k, Mat<F> basis) : k_(k), basis_(std::move(basis))
    {
        rows_ = independent_columns(k_, transpose(basis_));
        if (rows_.size() != basis_.cols())
            throw std::invalid_argument("SpanCoordinates: basis is not linearly independent");
        auto inv = inverse(k_, select_rows(k_, basis_, rows_));
        inv_ = std::move(*inv);
    }

    std::size_t dim() const { return basis_.cols(); }
    std::size_t ambient_dim() const { return basis_.rows(); }
    const Mat<F>& basis() const { return basis_; }

    /// Coordinates of vectors assumed to lie in the span.
    Mat<F> coords(const Mat<F>& vectors) const { return multiply(k_, inv_, select_rows(k_, vectors, rows_)); }

    /// Coordinates, or nullopt when some vector is outside the span.
    std::optional<Mat<F>> try_coords(const Mat<F>& vectors) const
    {
        Mat<F> c = coords(vectors);
        if (!equal(k_, multiply(k_, basis_, c), vectors))
            return std::nullopt;
        return c;
    }

private:
    F k_{};
    Mat<F> basis_;
    std::vector<std::size_t> rows_;
    Mat<F> inv_;
};

/// Linear projection onto a quotient space k^n / span(relations). The
/// quotient basis is the set of standard vectors that are not pivots of the
/// row-reduced relations.
template <class F>
class QuotientMap {
public:
    QuotientMap(const F& k, std::size_t ambient, const Mat<F>& relations) : k_(k), ambient_(ambient)
    {
        std::vector<bool> is_pivot(ambient, false);
        Echelon<F> ech;
        if (relations.cols() > 0) {
            ech = row_reduce(k, transpose(relations), true);
            for (auto p : ech.pivots)
                is_pivot[p] = true;
        }
        std::vector<std::size_t> index(ambient, 0);
        for (std::size_t s = 0; s < ambient; ++s)
            if (!is_pivot[s]) {
                index[s] = kept_.size();
                kept_.push_back(s);
            }
        proj_ = zeros(k, kept_.size(), ambient);
        for (std::size_t s = 0; s < ambient; ++s)
            if (!is_pivot[s])
                proj_(index[s], s) = k.one();
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
            const std::size_t p = ech.pivots[i];
            for (std::size_t s = 0; s < ambient; ++s)
                if (!is_pivot[s] && !k.is_zero(ech.reduced(i, s)))
                    proj_(index[s], p) = k.neg(ech.reduced(i, s));
        }
    }

    std::size_t dim() const { return kept_.size(); }
    /// Standard basis vectors of the ambient space whose images form the quotient basis.
    const std::vector<std::size_t>& kept() const { return kept_; }
    const Mat<F>& projection() const { return proj_; }

    /// Matrix on the quotient induced by an ambient endomorphism preserving the relations.
    Mat<F> induced(const Mat<F>& ambient_map) const
    {
        return multiply(k_, proj_, select_columns(k_, ambient_map, kept_));
    }

private:
    F k_{};
    std::size_t ambient_;
    std::vector<std::size_t> kept_;
    Mat<F> proj_;
};

} // namespace singquiv
