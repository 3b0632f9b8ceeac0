#ifndef GOMETRICS_MATRIX_HPP
#define GOMETRICS_MATRIX_HPP

#include "gometrics/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gometrics {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix over an arbitrary field type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const Vector<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(const std::vector<Vector<T>>& cols, std::size_t rows)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j)
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    Vector<T> column(std::size_t j) const
    {
        Vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    std::vector<Vector<T>> columns() const
    {
        std::vector<Vector<T>> out;
        out.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            out.push_back(column(j));
        return out;
    }

    Vector<T> row(std::size_t i) const
    {
        return Vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Appends the rows of `other` below this matrix.
    void append_rows(const Matrix& other)
    {
        if (rows_ == 0 && cols_ == 0) {
            *this = other;
            return;
        }
        if (other.cols_ != cols_)
            throw std::invalid_argument("append_rows: column mismatch");
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        rows_ += other.rows_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero_exact(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vector<T> operator*(const Matrix& a, const Vector<T>& x)
    {
        if (a.cols_ != x.size())
            throw std::invalid_argument("matrix-vector product: shape mismatch");
        Vector<T> y(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (!is_zero_exact(x[j]))
                    y[i] += a(i, j) * x[j];
        return y;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const T& s, Matrix a)
    {
        for (auto& v : a.data_)
            v *= s;
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    void check_same(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Vector<T> zeros(std::size_t n)
{
    return Vector<T>(n, T(0));
}

template <class T>
Vector<T> unit_vector(std::size_t n, std::size_t i)
{
    Vector<T> v(n, T(0));
    v.at(i) = T(1);
    return v;
}

template <class T>
Vector<T> operator+(Vector<T> a, const Vector<T>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

template <class T>
Vector<T> operator-(Vector<T> a, const Vector<T>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

template <class T>
Vector<T> scaled(const T& s, Vector<T> a)
{
    for (auto& v : a)
        v *= s;
    return a;
}

/// y += s * x
template <class T>
void axpy(const T& s, const Vector<T>& x, Vector<T>& y)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero_exact(x[i]))
            y[i] += s * x[i];
}

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b)
{
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/// Bilinear form x^T G y.
template <class T>
T bilinear(const Matrix<T>& g, const Vector<T>& x, const Vector<T>& y)
{
    T s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_zero_exact(x[i]))
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!is_zero_exact(y[j]))
                s += x[i] * g(i, j) * y[j];
    }
    return s;
}

template <class T>
bool all_zero_exact(const Vector<T>& v)
{
    for (const auto& x : v)
        if (!is_zero_exact(x))
            return false;
    return true;
}

template <class T>
double max_abs(const Vector<T>& v)
{
    double m = 0;
    for (const auto& x : v)
        m = std::max(m, std::abs(to_double(x)));
    return m;
}

template <class T>
double max_abs(const Matrix<T>& a)
{
    return max_abs(a.data());
}

template <class To, class From>
Vector<To> convert(const Vector<From>& v)
{
    Vector<To> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if constexpr (std::is_same_v<To, From>)
            out.push_back(x);
        else if constexpr (is_exact_v<To>)
            static_assert(!is_exact_v<To>, "lossy conversion into an exact type");
        else
            out.push_back(static_cast<To>(to_double(x)));
    }
    return out;
}

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m)
{
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<To, From>)
                out(i, j) = m(i, j);
            else
                out(i, j) = static_cast<To>(to_double(m(i, j)));
        }
    return out;
}

} // namespace gometrics

#endif // GOMETRICS_MATRIX_HPP
