#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ring.hpp"

namespace combid {

// Dense row-major matrix over an exact ring T.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, ring_zero<T>())
    {
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw input_error("matrix entry count does not match its shape");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
    {
        data_.reserve(rows_ * cols_);
        for (const auto &r : rows) {
            if (r.size() != cols_)
                throw input_error("ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = ring_one<T>();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T> &entries() const { return data_; }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Largest order accepted by det, per and charpoly.
inline constexpr std::size_t expansion_cap = 10;

template <class T>
Matrix<T> transpose(const Matrix<T> &a)
{
    Matrix<T> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

template <class T>
Matrix<T> operator+(const Matrix<T> &a, const Matrix<T> &b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw input_error("matrix sum: shape mismatch");
    Matrix<T> s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s(i, j) = a(i, j) + b(i, j);
    return s;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T> &a, const Matrix<T> &b)
{
    if (a.cols() != b.rows())
        throw input_error("matrix product: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + ")");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
Matrix<T> mat_pow(Matrix<T> a, std::size_t r)
{
    if (!a.is_square())
        throw input_error("matrix power requires a square matrix");
    Matrix<T> result = Matrix<T>::identity(a.rows());
    while (r > 0) {
        if (r & 1U)
            result = mat_mul(result, a);
        r >>= 1U;
        if (r > 0)
            a = mat_mul(a, a);
    }
    return result;
}

template <class T>
T trace(const Matrix<T> &a)
{
    if (!a.is_square())
        throw input_error("trace requires a square matrix");
    T t = ring_zero<T>();
    for (std::size_t i = 0; i < a.rows(); ++i)
        t += a(i, i);
    return t;
}

namespace detail {

inline void check_expandable(std::size_t rows, std::size_t cols, const char *what)
{
    if (rows != cols)
        throw input_error(std::string(what) + " requires a square matrix");
    if (rows > expansion_cap)
        throw cap_exceeded(std::string(what) + ": order " + std::to_string(rows) + " exceeds cap " +
                           std::to_string(expansion_cap));
}

// Permutation expansion of an n x n array grouped by leading rows:
// partial[S] is the expansion of rows 0..|S|-1 against the column set S.
// Every permutation contributes exactly once, with sign when `alternating`.
// No division is performed, so U may be any commutative ring.
template <class U, class Entry>
U permutation_sum(std::size_t n, Entry &&entry, bool alternating)
{
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<U> partial(std::size_t{1} << n, U(0));
    partial[0] = U(1);
    for (std::uint32_t set = 1; set <= full; ++set) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(set)) - 1;
        U acc(0);
        for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
            const std::uint32_t bit = rest & (~rest + 1);
            const U &sub = partial[set ^ bit];
            if (is_zero(sub))
                continue;
            const std::size_t col = static_cast<std::size_t>(std::countr_zero(bit));
            U term = entry(row, col) * sub;
            const bool odd = alternating && ((row + static_cast<std::size_t>(std::popcount(set & (bit - 1)))) & 1U);
            if (odd)
                acc -= term;
            else
                acc += term;
        }
        partial[set] = std::move(acc);
    }
    return std::move(partial[full]);
}

// Dense univariate polynomial over T, coefficients from degree 0 upward.
template <class T>
struct UPoly {
    std::vector<T> c;

    UPoly() = default;
    UPoly(int v) : c{T(v)} {}
    explicit UPoly(std::vector<T> coeffs) : c(std::move(coeffs)) {}

    UPoly &operator+=(const UPoly &o)
    {
        if (o.c.size() > c.size())
            c.resize(o.c.size(), ring_zero<T>());
        for (std::size_t i = 0; i < o.c.size(); ++i)
            c[i] += o.c[i];
        return *this;
    }

    UPoly &operator-=(const UPoly &o)
    {
        if (o.c.size() > c.size())
            c.resize(o.c.size(), ring_zero<T>());
        for (std::size_t i = 0; i < o.c.size(); ++i)
            c[i] -= o.c[i];
        return *this;
    }

    friend UPoly operator*(const UPoly &a, const UPoly &b)
    {
        if (a.c.empty() || b.c.empty())
            return UPoly();
        UPoly out(std::vector<T>(a.c.size() + b.c.size() - 1, ring_zero<T>()));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i]))
                continue;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                out.c[i + j] += a.c[i] * b.c[j];
        }
        return out;
    }

    friend bool is_zero(const UPoly &p)
    {
        for (const auto &v : p.c)
            if (!is_zero(v))
                return false;
        return true;
    }
};

} // namespace detail

// Determinant as the signed sum over all permutations.
template <class T>
T det(const Matrix<T> &m)
{
    detail::check_expandable(m.rows(), m.cols(), "det");
    return detail::permutation_sum<T>(m.rows(), [&](std::size_t i, std::size_t j) -> const T & { return m(i, j); }, true);
}

// Permanent: the same expansion without signs.
template <class T>
T per(const Matrix<T> &m)
{
    detail::check_expandable(m.rows(), m.cols(), "per");
    return detail::permutation_sum<T>(m.rows(), [&](std::size_t i, std::size_t j) -> const T & { return m(i, j); }, false);
}

// Coefficients of det(xI - M), leading coefficient first. Computed by
// cofactor expansion over T[x], so it stays division-free over any ring.
template <class T>
std::vector<T> charpoly(const Matrix<T> &m)
{
    detail::check_expandable(m.rows(), m.cols(), "charpoly");
    using P = detail::UPoly<T>;
    const std::size_t n = m.rows();
    auto entry = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return P(std::vector<T>{-m(i, j), ring_one<T>()});
        return P(std::vector<T>{-m(i, j)});
    };
    P p = detail::permutation_sum<P>(n, entry, true);
    p.c.resize(n + 1, ring_zero<T>());
    return {p.c.rbegin(), p.c.rend()};
}

template <class T>
std::vector<T> mat_vec(const Matrix<T> &a, const std::vector<T> &v)
{
    if (a.cols() != v.size())
        throw input_error("matrix-vector product: dimension mismatch");
    std::vector<T> out(a.rows(), ring_zero<T>());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

// Map every entry through f, e.g. to evaluate a symbolic matrix.
template <class T, class F>
auto map_entries(const Matrix<T> &m, F &&f) -> Matrix<decltype(f(m(0, 0)))>
{
    using U = decltype(f(m(0, 0)));
    std::vector<U> out;
    out.reserve(m.entries().size());
    for (const auto &v : m.entries())
        out.push_back(f(v));
    return Matrix<U>(m.rows(), m.cols(), std::move(out));
}

} // namespace combid
