#ifndef GOMETRICS_LINALG_HPP
#define GOMETRICS_LINALG_HPP

#include "gometrics/matrix.hpp"

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <utility>

namespace gometrics {

/// Rank threshold for floating point: singular values at or below this
/// fraction of the largest column norm count as zero.
inline constexpr double kRelativeRankThreshold = 1e-10;

namespace detail {

template <class F>
using EigenMat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using EigenVec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <class F, class T>
EigenMat<F> to_eigen(const Matrix<T>& m)
{
    EigenMat<F> e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e(i, j) = static_cast<F>(to_double(m(i, j)));
    return e;
}

template <class F>
F largest_column_norm(const EigenMat<F>& m)
{
    F best = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        best = std::max(best, m.col(j).norm());
    return best;
}

/// Reduced row echelon form over an exact field. Returns pivot columns.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero_exact(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero_exact(m(i, c)))
                continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero_exact(m(r, j)))
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

/// Singular values of a matrix, evaluated in double precision.
template <class T>
std::vector<double> singular_values(const Matrix<T>& m)
{
    if (m.empty())
        return {};
    const auto e = detail::to_eigen<double>(m);
    Eigen::JacobiSVD<detail::EigenMat<double>> svd(e);
    const auto& s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

template <class T>
std::size_t rank(const Matrix<T>& m)
{
    if (m.empty())
        return 0;
    if constexpr (is_exact_v<T>) {
        Matrix<T> work = m;
        return detail::rref_in_place(work).size();
    } else {
        const auto e = detail::to_eigen<double>(m);
        const double tol = kRelativeRankThreshold * detail::largest_column_norm<double>(e);
        Eigen::JacobiSVD<detail::EigenMat<double>> svd(e);
        std::size_t r = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > tol)
                ++r;
        return r;
    }
}

/// Basis of {x : m x = 0}, one column per basis vector. Orthonormal
/// (Euclidean) in float mode; RREF-derived in exact mode.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m)
{
    const std::size_t n = m.cols();
    if (n == 0)
        return Matrix<T>(0, 0);
    if (m.rows() == 0)
        return Matrix<T>::identity(n);
    if constexpr (is_exact_v<T>) {
        Matrix<T> work = m;
        const auto pivots = detail::rref_in_place(work);
        std::vector<bool> is_pivot(n, false);
        for (auto p : pivots)
            is_pivot[p] = true;
        std::vector<Vector<T>> basis;
        for (std::size_t free = 0; free < n; ++free) {
            if (is_pivot[free])
                continue;
            Vector<T> v(n, T(0));
            v[free] = T(1);
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -work(r, free);
            basis.push_back(std::move(v));
        }
        return Matrix<T>::from_columns(basis, n);
    } else {
        const auto e = detail::to_eigen<double>(m);
        const double tol = kRelativeRankThreshold * detail::largest_column_norm<double>(e);
        // Pad to a square system so that the full V factor is available.
        detail::EigenMat<double> padded = detail::EigenMat<double>::Zero(std::max<Eigen::Index>(e.rows(), e.cols()), e.cols());
        padded.topRows(e.rows()) = e;
        Eigen::JacobiSVD<detail::EigenMat<double>> svd(padded, Eigen::ComputeFullV);
        std::size_t r = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > tol)
                ++r;
        Matrix<T> out(n, n - r);
        for (std::size_t j = r; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                out(i, j - r) = static_cast<T>(svd.matrixV()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        return out;
    }
}

/// Indices of a maximal linearly independent set of columns, scanning left to right.
template <class T>
std::vector<std::size_t> independent_columns(const Matrix<T>& m)
{
    if (m.empty())
        return {};
    if constexpr (is_exact_v<T>) {
        Matrix<T> work = m;
        return detail::rref_in_place(work);
    } else {
        std::vector<std::size_t> keep;
        Matrix<T> acc(m.rows(), 0);
        std::size_t current = 0;
        std::vector<Vector<T>> cols;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cols.push_back(m.column(j));
            const std::size_t r = rank(Matrix<T>::from_columns(cols, m.rows()));
            if (r > current) {
                keep.push_back(j);
                current = r;
            } else {
                cols.pop_back();
            }
        }
        return keep;
    }
}

/// Outcome of solving M z = b in the least-squares sense.
template <class T>
struct LeastSquares {
    Vector<T> solution;
    /// ||M z - b|| / ||b|| (0 when b = 0).
    double relative_residual = 0;
    /// Smallest singular value above the rank threshold; empty when M has none.
    std::optional<double> sigma_min;
    /// Exact mode only: rank[M|b] == rank M.
    std::optional<bool> consistent;
    std::size_t rank = 0;
};

namespace detail {

template <class F>
LeastSquares<F> svd_least_squares(const EigenMat<F>& m, const EigenVec<F>& b)
{
    LeastSquares<F> out;
    const Eigen::Index n = m.cols();
    out.solution.assign(static_cast<std::size_t>(n), F(0));
    const F bnorm = b.norm();
    if (n == 0 || m.rows() == 0) {
        out.relative_residual = bnorm > 0 ? 1.0 : 0.0;
        return out;
    }
    const F tol = static_cast<F>(kRelativeRankThreshold) * largest_column_norm<F>(m);
    Eigen::JacobiSVD<EigenMat<F>> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    EigenVec<F> z = EigenVec<F>::Zero(n);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) <= tol)
            continue;
        ++out.rank;
        const F coeff = svd.matrixU().col(i).dot(b) / s(i);
        z += coeff * svd.matrixV().col(i);
        if (!out.sigma_min || static_cast<double>(s(i)) < *out.sigma_min)
            out.sigma_min = static_cast<double>(s(i));
    }
    for (Eigen::Index i = 0; i < n; ++i)
        out.solution[static_cast<std::size_t>(i)] = z(i);
    out.relative_residual = bnorm > 0 ? static_cast<double>((m * z - b).norm() / bnorm) : 0.0;
    return out;
}

} // namespace detail

/// Least-squares solve. Exact types decide consistency by rank comparison and
/// return a particular solution (free variables zero) when consistent; the
/// residual of the minimal-residual solution is reported either way.
template <class T>
LeastSquares<T> least_squares(const Matrix<T>& m, const Vector<T>& b)
{
    if (m.rows() != b.size())
        throw std::invalid_argument("least_squares: shape mismatch");
    if constexpr (is_exact_v<T>) {
        LeastSquares<T> out;
        const std::size_t n = m.cols();
        out.solution.assign(n, T(0));
        {
            const auto sv = singular_values(m);
            double tol = kRelativeRankThreshold * (sv.empty() ? 0.0 : sv.front());
            for (double s : sv)
                if (s > tol && (!out.sigma_min || s < *out.sigma_min))
                    out.sigma_min = s;
        }
        Matrix<T> aug(m.rows(), n + 1);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < n; ++j)
                aug(i, j) = m(i, j);
            aug(i, n) = b[i];
        }
        const auto pivots = detail::rref_in_place(aug);
        const bool consistent = pivots.empty() || pivots.back() != n;
        out.consistent = consistent;
        out.rank = consistent ? pivots.size() : pivots.size() - 1;
        if (consistent) {
            for (std::size_t r = 0; r < pivots.size(); ++r)
                out.solution[pivots[r]] = aug(r, n);
            out.relative_residual = 0;
            return out;
        }
        // Normal equations M^T M z = M^T b are always consistent.
        const Matrix<T> mt = m.transpose();
        const Matrix<T> normal = mt * m;
        const Vector<T> rhs = mt * b;
        Matrix<T> naug(n, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                naug(i, j) = normal(i, j);
            naug(i, n) = rhs[i];
        }
        const auto npiv = detail::rref_in_place(naug);
        Vector<T> z(n, T(0));
        for (std::size_t r = 0; r < npiv.size(); ++r)
            if (npiv[r] < n)
                z[npiv[r]] = naug(r, n);
        const Vector<T> resid = m * z - b;
        const double num = to_double(dot(resid, resid));
        const double den = to_double(dot(b, b));
        out.relative_residual = den > 0 ? std::sqrt(num / den) : 0.0;
        out.solution = z;
        return out;
    } else {
        const auto e = detail::to_eigen<T>(m);
        detail::EigenVec<T> eb(static_cast<Eigen::Index>(b.size()));
        for (std::size_t i = 0; i < b.size(); ++i)
            eb(static_cast<Eigen::Index>(i)) = b[i];
        return detail::svd_least_squares<T>(e, eb);
    }
}

/// Re-solves a floating point system in extended precision.
inline LeastSquares<long double> least_squares_extended(const Matrix<double>& m, const Vector<double>& b)
{
    const auto e = detail::to_eigen<long double>(m);
    detail::EigenVec<long double> eb(static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        eb(static_cast<Eigen::Index>(i)) = b[i];
    return detail::svd_least_squares<long double>(e, eb);
}

/// Inverse of a square matrix over an exact field, or via LU in float mode.
template <class T>
Matrix<T> inverse(const Matrix<T>& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    if constexpr (is_exact_v<T>) {
        Matrix<T> aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                aug(i, j) = m(i, j);
            aug(i, n + i) = T(1);
        }
        const auto piv = detail::rref_in_place(aug);
        if (piv.size() < n || piv[n - 1] != n - 1)
            throw std::domain_error("inverse: singular matrix");
        Matrix<T> out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) = aug(i, n + j);
        return out;
    } else {
        const auto e = detail::to_eigen<double>(m);
        Eigen::FullPivLU<detail::EigenMat<double>> lu(e);
        if (!lu.isInvertible())
            throw std::domain_error("inverse: singular matrix");
        const detail::EigenMat<double> inv = lu.inverse();
        Matrix<T> out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) = static_cast<T>(inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        return out;
    }
}

/// Positive definiteness of a symmetric matrix: exact via pivots of
/// symmetric Gaussian elimination, float via Cholesky.
template <class T>
bool is_positive_definite(const Matrix<T>& m)
{
    const std::size_t n = m.rows();
    if constexpr (is_exact_v<T>) {
        Matrix<T> a = m;
        for (std::size_t k = 0; k < n; ++k) {
            if (sign_of(a(k, k)) <= 0)
                return false;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (is_zero_exact(a(i, k)))
                    continue;
                const T f = a(i, k) / a(k, k);
                for (std::size_t j = k; j < n; ++j)
                    a(i, j) -= f * a(k, j);
            }
        }
        return true;
    } else {
        const auto e = detail::to_eigen<double>(m);
        Eigen::LLT<detail::EigenMat<double>> llt(e);
        return llt.info() == Eigen::Success;
    }
}

/// Lower Cholesky factor L with m = L L^T (float only).
inline Matrix<double> cholesky(const Matrix<double>& m)
{
    const auto e = detail::to_eigen<double>(m);
    Eigen::LLT<detail::EigenMat<double>> llt(e);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("cholesky: matrix not positive definite");
    const detail::EigenMat<double> l = llt.matrixL();
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return out;
}

} // namespace gometrics

#endif // GOMETRICS_LINALG_HPP
