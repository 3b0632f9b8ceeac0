#ifndef GOMETRICS_SUBSPACE_HPP
#define GOMETRICS_SUBSPACE_HPP

#include "gometrics/liealg.hpp"

namespace gometrics {

/// Relative tolerance for float membership tests.
inline constexpr double kMembershipTolerance = 1e-9;

/// Linear subspace of a Lie algebra. The basis is <.,.>-orthogonal; in float
/// mode it is also normalized.
template <class T>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(AlgebraPtr<T> alg) : alg_(std::move(alg)) {}

    /// `scale` bounds the expected size of the generators; float generators
    /// below kRelativeRankThreshold * scale count as zero even when every
    /// generator is that small.
    static Subspace span(AlgebraPtr<T> alg, const std::vector<Vector<T>>& gens, double scale = 0.0)
    {
        Subspace s(std::move(alg));
        s.basis_ = s.orthogonal_basis(gens, scale);
        return s;
    }

    static Subspace whole(AlgebraPtr<T> alg)
    {
        std::vector<Vector<T>> gens;
        for (std::size_t i = 0; i < alg->dim(); ++i)
            gens.push_back(alg->basis_vector(i));
        return span(std::move(alg), gens);
    }

    static Subspace of_indices(AlgebraPtr<T> alg, const std::vector<std::size_t>& idx)
    {
        std::vector<Vector<T>> gens;
        for (auto i : idx)
            gens.push_back(alg->basis_vector(i));
        return span(std::move(alg), gens);
    }

    const AlgebraPtr<T>& algebra() const { return alg_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return alg_->dim(); }
    const std::vector<Vector<T>>& basis() const { return basis_; }

    /// Orthogonal projection onto the subspace.
    Vector<T> project(const Vector<T>& x) const
    {
        Vector<T> out(alg_->dim(), T(0));
        for (const auto& b : basis_) {
            const T c = alg_->inner(x, b) / alg_->inner(b, b);
            if (!is_zero_exact(c))
                axpy(c, b, out);
        }
        return out;
    }

    Matrix<T> projector() const
    {
        const std::size_t n = alg_->dim();
        Matrix<T> p(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector<T> col = project(alg_->basis_vector(j));
            for (std::size_t i = 0; i < n; ++i)
                p(i, j) = col[i];
        }
        return p;
    }

    /// Coefficients of the projection of x in the stored basis.
    Vector<T> coordinates(const Vector<T>& x) const
    {
        Vector<T> c;
        for (const auto& b : basis_)
            c.push_back(alg_->inner(x, b) / alg_->inner(b, b));
        return c;
    }

    Vector<T> combine(const Vector<T>& coeffs) const
    {
        if (coeffs.size() != basis_.size())
            throw std::invalid_argument("combine: coefficient count");
        Vector<T> out(alg_->dim(), T(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            axpy(coeffs[i], basis_[i], out);
        return out;
    }

    bool contains(const Vector<T>& x) const
    {
        const Vector<T> r = x - project(x);
        if constexpr (is_exact_v<T>) {
            return all_zero_exact(r);
        } else {
            const double nx = std::sqrt(std::max(0.0, to_double(alg_->inner(x, x))));
            const double nr = std::sqrt(std::max(0.0, to_double(alg_->inner(r, r))));
            return nr <= kMembershipTolerance * std::max(nx, 1e-300) || nx == 0.0;
        }
    }

    bool contains(const Subspace& other) const
    {
        for (const auto& b : other.basis_)
            if (!contains(b))
                return false;
        return true;
    }

    bool operator==(const Subspace& other) const { return dim() == other.dim() && contains(other); }

private:
    std::vector<Vector<T>> orthogonal_basis(const std::vector<Vector<T>>& gens, double scale = 0.0) const
    {
        const std::size_t n = alg_->dim();
        for (const auto& g : gens)
            if (g.size() != n)
                throw std::invalid_argument("Subspace: vector of wrong length");
        if (gens.empty())
            return {};
        if constexpr (is_exact_v<T>) {
            const Matrix<T> m = Matrix<T>::from_columns(gens, n);
            std::vector<Vector<T>> out;
            for (auto j : independent_columns(m)) {
                Vector<T> v = gens[j];
                for (const auto& b : out) {
                    const T c = alg_->inner(v, b) / alg_->inner(b, b);
                    if (!is_zero_exact(c))
                        axpy(T(-c), b, v);
                }
                out.push_back(std::move(v));
            }
            return out;
        } else {
            // orthonormal coordinates y = L^T x with <.,.> = L L^T
            const Matrix<double> l = cholesky(convert<double>(alg_->inner()));
            const Matrix<double> lt = l.transpose();
            const Matrix<double> lt_inv = inverse(lt);
            detail::EigenMat<double> y(n, gens.size());
            for (std::size_t j = 0; j < gens.size(); ++j) {
                const Vector<double> yj = lt * convert<double>(gens[j]);
                for (std::size_t i = 0; i < n; ++i)
                    y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = yj[i];
            }
            const double tol = kRelativeRankThreshold * std::max(scale, detail::largest_column_norm<double>(y));
            Eigen::JacobiSVD<detail::EigenMat<double>> svd(y, Eigen::ComputeThinU);
            std::vector<Vector<T>> out;
            for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
                if (svd.singularValues()(k) <= tol)
                    continue;
                Vector<double> u(n);
                for (std::size_t i = 0; i < n; ++i)
                    u[i] = svd.matrixU()(static_cast<Eigen::Index>(i), k);
                out.push_back(convert<T>(lt_inv * u));
            }
            return out;
        }
    }

    AlgebraPtr<T> alg_;
    std::vector<Vector<T>> basis_;
};

template <class T>
Subspace<T> sum(const Subspace<T>& p, const Subspace<T>& q)
{
    std::vector<Vector<T>> gens = p.basis();
    gens.insert(gens.end(), q.basis().begin(), q.basis().end());
    return Subspace<T>::span(p.algebra(), gens);
}

template <class T>
Subspace<T> sum(const std::vector<Subspace<T>>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("sum of no subspaces");
    std::vector<Vector<T>> gens;
    for (const auto& p : parts)
        gens.insert(gens.end(), p.basis().begin(), p.basis().end());
    return Subspace<T>::span(parts.front().algebra(), gens);
}

template <class T>
Subspace<T> intersection(const Subspace<T>& p, const Subspace<T>& q)
{
    const std::size_t n = p.ambient_dim();
    if (p.dim() == 0 || q.dim() == 0)
        return Subspace<T>(p.algebra());
    Matrix<T> m(n, p.dim() + q.dim());
    for (std::size_t j = 0; j < p.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = p.basis()[j][i];
    for (std::size_t j = 0; j < q.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            m(i, p.dim() + j) = -q.basis()[j][i];
    const Matrix<T> ns = nullspace(m);
    std::vector<Vector<T>> gens;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        Vector<T> coeffs(p.dim());
        for (std::size_t j = 0; j < p.dim(); ++j)
            coeffs[j] = ns(j, c);
        gens.push_back(p.combine(coeffs));
    }
    return Subspace<T>::span(p.algebra(), gens);
}

/// The <.,.>-orthogonal complement of p inside `ambient`.
template <class T>
Subspace<T> orthogonal_complement(const Subspace<T>& p, const Subspace<T>& ambient)
{
    if (p.dim() == 0)
        return ambient;
    const auto& alg = *p.algebra();
    Matrix<T> m(p.dim(), ambient.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < ambient.dim(); ++j)
            m(i, j) = alg.inner(p.basis()[i], ambient.basis()[j]);
    const Matrix<T> ns = nullspace(m);
    std::vector<Vector<T>> gens;
    for (std::size_t c = 0; c < ns.cols(); ++c)
        gens.push_back(ambient.combine(ns.column(c)));
    return Subspace<T>::span(p.algebra(), gens);
}

template <class T>
Subspace<T> orthogonal_complement(const Subspace<T>& p)
{
    return orthogonal_complement(p, Subspace<T>::whole(p.algebra()));
}

/// Span of all brackets [p, q] for p in P, q in Q.
template <class T>
Subspace<T> module_product(const Subspace<T>& p, const Subspace<T>& q)
{
    const auto& alg = *p.algebra();
    std::vector<Vector<T>> gens;
    for (const auto& x : p.basis())
        for (const auto& y : q.basis())
            gens.push_back(alg.bracket(x, y));
    double scale = 0.0;
    if constexpr (!is_exact_v<T>) {
        auto largest = [&](const Subspace<T>& s) {
            double m = 0.0;
            for (const auto& b : s.basis())
                m = std::max(m, std::sqrt(std::max(0.0, to_double(alg.inner(b, b)))));
            return m;
        };
        double c = 0.0;
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j)
                for (std::size_t k = 0; k < alg.dim(); ++k)
                    c = std::max(c, std::abs(to_double(alg.structure(i, j, k))));
        scale = c * largest(p) * largest(q);
    }
    return Subspace<T>::span(p.algebra(), gens, scale);
}

template <class T>
bool is_subalgebra(const Subspace<T>& p)
{
    return p.contains(module_product(p, p));
}

template <class T>
bool are_orthogonal(const Subspace<T>& p, const Subspace<T>& q)
{
    for (const auto& x : p.basis())
        for (const auto& y : q.basis()) {
            const T v = p.algebra()->inner(x, y);
            if constexpr (is_exact_v<T>) {
                if (!is_zero_exact(v))
                    return false;
            } else if (std::abs(to_double(v)) > kMembershipTolerance) {
                return false;
            }
        }
    return true;
}

namespace detail {

template <class T>
Subspace<T> solution_space(const AlgebraPtr<T>& alg, const Matrix<T>& stacked)
{
    if (stacked.rows() == 0)
        return Subspace<T>::whole(alg);
    return Subspace<T>::span(alg, nullspace(stacked).columns());
}

} // namespace detail

/// c_g(P) = {x : [x, p] = 0 for all p in P}.
template <class T>
Subspace<T> centralizer(const Subspace<T>& p)
{
    Matrix<T> stacked;
    for (const auto& b : p.basis())
        stacked.append_rows(p.algebra()->ad(b));
    return detail::solution_space(p.algebra(), stacked);
}

/// n_g(P) = {x : [x, p] in P for all p in P}.
template <class T>
Subspace<T> normalizer(const Subspace<T>& p)
{
    const std::size_t n = p.ambient_dim();
    const Matrix<T> off = Matrix<T>::identity(n) - p.projector();
    Matrix<T> stacked;
    for (const auto& b : p.basis())
        stacked.append_rows(off * p.algebra()->ad(b));
    return detail::solution_space(p.algebra(), stacked);
}

/// Plane v_r of a root plane as a subspace.
template <class T>
Subspace<T> root_plane_space(const AlgebraPtr<T>& alg, const std::string& label)
{
    const auto& rp = alg->root_plane(label);
    return Subspace<T>::of_indices(alg, {rp.u, rp.v});
}

/// The line in the Cartan subalgebra spanned by the element dual to a root.
template <class T>
Subspace<T> coroot_line(const AlgebraPtr<T>& alg, const std::string& label)
{
    return Subspace<T>::span(alg, {alg->cartan_element(alg->root_plane(label).root)});
}

template <class T>
Subspace<T> cartan_subspace(const AlgebraPtr<T>& alg)
{
    return Subspace<T>::of_indices(alg, alg->cartan_indices());
}

/// Full-rank subalgebra t + sum of v_r over the positive members of a closed
/// symmetric root subsystem (for algebras built from a root system).
template <class T>
Subspace<T> subsystem_subalgebra(const AlgebraPtr<T>& alg, const RootSubsystem& a)
{
    std::vector<std::size_t> idx = alg->cartan_indices();
    for (const auto& r : a.positive_members()) {
        const auto& rp = alg->root_plane(a.parent->label(r));
        idx.push_back(rp.u);
        idx.push_back(rp.v);
    }
    return Subspace<T>::of_indices(alg, idx);
}

} // namespace gometrics

#endif // GOMETRICS_SUBSPACE_HPP
