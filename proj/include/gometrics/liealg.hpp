#ifndef GOMETRICS_LIEALG_HPP
#define GOMETRICS_LIEALG_HPP

#include "gometrics/errors.hpp"
#include "gometrics/linalg.hpp"
#include "gometrics/rootsys.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gometrics {

/// Plane v_r = span(U_r, V_r) attached to a positive root. `root` holds the
/// coordinates of the Cartan element dual to the root, in the algebra's Cartan basis.
struct RootPlane {
    std::string label;
    Weight root;
    std::size_t u = 0;
    std::size_t v = 0;
};

/// Finite-dimensional real Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k, with an ad-invariant inner product.
/// When `lambda` is set the inner product equals lambda * (-B).
template <class T>
class LieAlgebra {
public:
    LieAlgebra(std::string name, std::vector<std::string> labels)
        : name_(std::move(name)), labels_(std::move(labels)), n_(labels_.size()),
          c_(n_ * n_ * n_, T(0)), inner_(Matrix<T>::identity(n_))
    {
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::size_t index_of(const std::string& label) const
    {
        for (std::size_t i = 0; i < n_; ++i)
            if (labels_[i] == label)
                return i;
        throw std::invalid_argument("no basis element named '" + label + "' in " + name_);
    }

    const T& structure(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

    /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
    void set_bracket(std::size_t i, std::size_t j, const Vector<T>& value)
    {
        if (value.size() != n_)
            throw std::invalid_argument("set_bracket: wrong length");
        for (std::size_t k = 0; k < n_; ++k) {
            c_[(i * n_ + j) * n_ + k] = value[k];
            c_[(j * n_ + i) * n_ + k] = -value[k];
        }
    }

    void set_inner(Matrix<T> g) { inner_ = std::move(g); }
    void set_lambda(std::optional<Rational> lambda, std::string gauge)
    {
        lambda_ = std::move(lambda);
        gauge_ = std::move(gauge);
    }
    void set_cartan(std::vector<std::size_t> idx) { cartan_ = std::move(idx); }
    void set_root_planes(std::vector<RootPlane> planes) { planes_ = std::move(planes); }

    const Matrix<T>& inner() const { return inner_; }
    T inner(const Vector<T>& x, const Vector<T>& y) const { return bilinear(inner_, x, y); }
    const std::optional<Rational>& lambda() const { return lambda_; }
    const std::string& gauge() const { return gauge_; }
    const std::vector<std::size_t>& cartan_indices() const { return cartan_; }
    const std::vector<RootPlane>& root_planes() const { return planes_; }

    const RootPlane& root_plane(const std::string& label) const
    {
        for (const auto& p : planes_)
            if (p.label == label)
                return p;
        throw std::invalid_argument("no root plane '" + label + "' in " + name_);
    }

    Vector<T> basis_vector(std::size_t i) const { return unit_vector<T>(n_, i); }

    /// Element of the Cartan subalgebra with the given Cartan-basis coordinates.
    Vector<T> cartan_element(const Weight& coords) const
    {
        if (coords.size() != cartan_.size())
            throw std::invalid_argument("cartan_element: wrong rank");
        Vector<T> v(n_, T(0));
        for (std::size_t i = 0; i < coords.size(); ++i)
            v[cartan_[i]] = from_rational<T>(coords[i]);
        return v;
    }

    Vector<T> bracket(const Vector<T>& x, const Vector<T>& y) const
    {
        if (x.size() != n_ || y.size() != n_)
            throw std::invalid_argument("bracket: wrong length");
        Vector<T> out(n_, T(0));
        for (std::size_t i = 0; i < n_; ++i) {
            if (is_zero_exact(x[i]))
                continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (is_zero_exact(y[j]) || i == j)
                    continue;
                const T xy = x[i] * y[j];
                const T* row = &c_[(i * n_ + j) * n_];
                for (std::size_t k = 0; k < n_; ++k)
                    if (!is_zero_exact(row[k]))
                        out[k] += xy * row[k];
            }
        }
        return out;
    }

    /// Matrix of ad(x): column j is [x, e_j].
    Matrix<T> ad(const Vector<T>& x) const
    {
        Matrix<T> m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (is_zero_exact(x[i]))
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    const T& c = structure(i, j, k);
                    if (!is_zero_exact(c))
                        m(k, j) += x[i] * c;
                }
        }
        return m;
    }

    Matrix<T> ad_basis(std::size_t i) const { return ad(basis_vector(i)); }

    /// Killing form B(e_i, e_j) = tr(ad e_i ad e_j).
    Matrix<T> killing() const
    {
        std::vector<Matrix<T>> ads;
        for (std::size_t i = 0; i < n_; ++i)
            ads.push_back(ad_basis(i));
        Matrix<T> b(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) {
                T s(0);
                for (std::size_t k = 0; k < n_; ++k)
                    for (std::size_t l = 0; l < n_; ++l)
                        if (!is_zero_exact(ads[i](k, l)) && !is_zero_exact(ads[j](l, k)))
                            s += ads[i](k, l) * ads[j](l, k);
                b(i, j) = s;
                b(j, i) = s;
            }
        return b;
    }

    /// Largest |c(i,j,k) + c(j,i,k)|.
    double antisymmetry_defect() const
    {
        double m = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    m = std::max(m, std::abs(to_double(T(structure(i, j, k) + structure(j, i, k)))));
        return m;
    }

    /// Largest entry of [ad e_i, ad e_j] - ad [e_i, e_j]; `exact_zero` reports
    /// whether every entry vanishes exactly.
    double jacobi_defect(bool* exact_zero = nullptr) const
    {
        std::vector<Matrix<T>> ads;
        for (std::size_t i = 0; i < n_; ++i)
            ads.push_back(ad_basis(i));
        double worst = 0;
        bool zero = true;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) {
                const Matrix<T> lhs = ads[i] * ads[j] - ads[j] * ads[i];
                const Matrix<T> rhs = ad(bracket(basis_vector(i), basis_vector(j)));
                const Matrix<T> d = lhs - rhs;
                for (const auto& v : d.data())
                    if (!is_zero_exact(v)) {
                        zero = false;
                        worst = std::max(worst, std::abs(to_double(v)));
                    }
            }
        if (exact_zero)
            *exact_zero = zero;
        return worst;
    }

    /// Largest |F([x,y],z) + F(y,[x,z])| over basis triples for the form F.
    double invariance_defect(const Matrix<T>& form, bool* exact_zero = nullptr) const
    {
        double worst = 0;
        bool zero = true;
        for (std::size_t i = 0; i < n_; ++i) {
            const Matrix<T> a = ad_basis(i);
            // F(ad x y, z) + F(y, ad x z) = (a^T F + F a)(y, z)
            const Matrix<T> d = a.transpose() * form + form * a;
            for (const auto& v : d.data())
                if (!is_zero_exact(v)) {
                    zero = false;
                    worst = std::max(worst, std::abs(to_double(v)));
                }
        }
        if (exact_zero)
            *exact_zero = zero;
        return worst;
    }

    /// Checks antisymmetry, Jacobi, ad-invariance of B and of the inner
    /// product, and, when lambda is set, inner = lambda(-B) with B negative
    /// definite. Exact types require exact zeros; floats allow 1e-12.
    void validate() const
    {
        const double tol = is_exact_v<T> ? 0.0 : 1e-12;
        auto fail = [&](const std::string& what, double amount) {
            throw ConstructionError(name_ + ": " + what + " (defect " + scalar_traits<double>::str(amount) + ")");
        };
        bool zero = false;
        const double anti = antisymmetry_defect();
        if (anti > tol)
            fail("structure constants not antisymmetric", anti);
        double d = jacobi_defect(&zero);
        if ((is_exact_v<T> && !zero) || d > tol)
            fail("Jacobi identity fails", d);
        const Matrix<T> b = killing();
        d = invariance_defect(b, &zero);
        if ((is_exact_v<T> && !zero) || d > tol * std::max(1.0, max_abs(b)))
            fail("Killing form not ad-invariant", d);
        d = invariance_defect(inner_, &zero);
        if ((is_exact_v<T> && !zero) || d > tol * std::max(1.0, max_abs(inner_)))
            fail("inner product not ad-invariant", d);
        if (!is_positive_definite(inner_))
            fail("inner product not positive definite", 0);
        if (lambda_) {
            const Matrix<T> expect = from_rational<T>(-*lambda_) * b;
            const double err = max_abs(Matrix<T>(expect - inner_));
            if ((is_exact_v<T> && !(expect == inner_)) || err > tol * std::max(1.0, max_abs(inner_)))
                fail("inner product is not lambda*(-B)", err);
            if (!is_positive_definite(Matrix<T>(from_int<T>(-1) * b)))
                fail("Killing form not negative definite", 0);
        }
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::size_t n_;
    std::vector<T> c_;
    Matrix<T> inner_;
    std::optional<Rational> lambda_;
    std::string gauge_ = "custom";
    std::vector<std::size_t> cartan_;
    std::vector<RootPlane> planes_;
};

template <class T>
using AlgebraPtr = std::shared_ptr<const LieAlgebra<T>>;

/// Converts an algebra to a floating point scalar type.
template <class To, class From>
AlgebraPtr<To> convert_algebra(const LieAlgebra<From>& a)
{
    auto out = std::make_shared<LieAlgebra<To>>(a.name(), a.labels());
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector<To> v(n);
            for (std::size_t k = 0; k < n; ++k)
                v[k] = static_cast<To>(to_double(a.structure(i, j, k)));
            out->set_bracket(i, j, v);
        }
    out->set_inner(convert<To>(a.inner()));
    out->set_lambda(a.lambda(), a.gauge());
    out->set_cartan(a.cartan_indices());
    out->set_root_planes(a.root_planes());
    return out;
}

/// The same algebra with its inner product rescaled to -B.
template <class T>
AlgebraPtr<T> with_minus_b_gauge(const LieAlgebra<T>& a)
{
    if (!a.lambda())
        throw std::invalid_argument("with_minus_b_gauge: algebra has no recorded lambda");
    auto out = std::make_shared<LieAlgebra<T>>(a);
    out->set_inner(from_rational<T>(1 / *a.lambda()) * a.inner());
    out->set_lambda(Rational(1), "minusB");
    return out;
}

/// su(2) with [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2 and the standard inner
/// product, which is (1/2)(-B).
template <class T>
AlgebraPtr<T> build_su2()
{
    auto a = std::make_shared<LieAlgebra<T>>("su2", std::vector<std::string>{"e1", "e2", "e3"});
    auto e = [](std::size_t i) { return unit_vector<T>(3, i); };
    a->set_bracket(0, 1, e(2));
    a->set_bracket(1, 2, e(0));
    a->set_bracket(2, 0, e(1));
    a->set_lambda(Rational(1, 2), "half-minusB");
    a->set_cartan({0});
    a->set_root_planes({RootPlane{"a", Weight{Rational(1)}, 1, 2}});
    a->validate();
    return a;
}

/// su(3) on the basis H1 = i diag(1,-1,0), H2 = i diag(1,1,-2), X1..X6
/// (off-diagonal real and imaginary generators of the (1,2), (1,3), (2,3)
/// entries) with <X,Y> = -1/2 Re tr(XY), so that B = -12 <.,.>.
template <class T>
AlgebraPtr<T> build_su3()
{
    enum { H1, H2, X1, X2, X3, X4, X5, X6 };
    auto a = std::make_shared<LieAlgebra<T>>(
        "su3", std::vector<std::string>{"H1", "H2", "X1", "X2", "X3", "X4", "X5", "X6"});
    auto vec = [](std::initializer_list<std::pair<int, long>> terms) {
        Vector<T> v(8, T(0));
        for (auto [k, c] : terms)
            v[static_cast<std::size_t>(k)] = from_int<T>(c);
        return v;
    };
    a->set_bracket(H1, X1, vec({{X2, 2}}));
    a->set_bracket(H1, X2, vec({{X1, -2}}));
    a->set_bracket(H1, X3, vec({{X4, 1}}));
    a->set_bracket(H1, X4, vec({{X3, -1}}));
    a->set_bracket(H1, X5, vec({{X6, -1}}));
    a->set_bracket(H1, X6, vec({{X5, 1}}));
    a->set_bracket(H2, X3, vec({{X4, 3}}));
    a->set_bracket(H2, X4, vec({{X3, -3}}));
    a->set_bracket(H2, X5, vec({{X6, 3}}));
    a->set_bracket(H2, X6, vec({{X5, -3}}));
    a->set_bracket(X1, X2, vec({{H1, 2}}));
    a->set_bracket(X1, X3, vec({{X5, -1}}));
    a->set_bracket(X1, X4, vec({{X6, -1}}));
    a->set_bracket(X1, X5, vec({{X3, 1}}));
    a->set_bracket(X1, X6, vec({{X4, 1}}));
    a->set_bracket(X2, X3, vec({{X6, 1}}));
    a->set_bracket(X2, X4, vec({{X5, -1}}));
    a->set_bracket(X2, X5, vec({{X4, 1}}));
    a->set_bracket(X2, X6, vec({{X3, -1}}));
    a->set_bracket(X3, X4, vec({{H1, 1}, {H2, 1}}));
    a->set_bracket(X3, X5, vec({{X1, -1}}));
    a->set_bracket(X3, X6, vec({{X2, 1}}));
    a->set_bracket(X4, X5, vec({{X2, -1}}));
    a->set_bracket(X4, X6, vec({{X1, -1}}));
    a->set_bracket(X5, X6, vec({{H1, -1}, {H2, 1}}));
    Vector<T> g(8, from_int<T>(1));
    g[H2] = from_int<T>(3);
    a->set_inner(Matrix<T>::diagonal(g));
    a->set_lambda(Rational(1, 12), "su3");
    a->set_cartan({H1, H2});
    auto w = [](long x, long y) { return Weight{Rational(x), Rational(y)}; };
    a->set_root_planes({RootPlane{"r12", w(2, 0), X1, X2}, RootPlane{"r13", w(1, 1), X3, X4},
                        RootPlane{"r23", w(-1, 1), X5, X6}});
    a->validate();
    return a;
}

namespace detail {

using RootPair = std::pair<std::size_t, std::size_t>; // indices into rs.roots

inline Weight add_weights(const Weight& a, const Weight& b, int sign = 1)
{
    Weight s = a;
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] += sign * b[i];
    return s;
}

/// Chevalley constants N(r,s), [E_r,E_s] = N(r,s) E_{r+s}, for one choice of
/// signs on the positive pairs (listed in positive-root order).
inline std::map<RootPair, Rational> chevalley_constants(const RootSystem& rs, const std::vector<int>& signs)
{
    std::vector<RootPair> pairs;
    for (std::size_t i = 0; i < rs.positive.size(); ++i)
        for (std::size_t j = i + 1; j < rs.positive.size(); ++j)
            if (rs.is_root(add_weights(rs.positive[i], rs.positive[j])))
                pairs.push_back({i, j});
    if (signs.size() != pairs.size())
        throw std::logic_error("chevalley_constants: sign vector length");
    std::map<RootPair, Rational> n;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const Weight& a = rs.positive[pairs[p].first];
        const Weight& b = rs.positive[pairs[p].second];
        long q = 0;
        while (rs.is_root(add_weights(b, scaled(Rational(q + 1), a), -1)))
            ++q;
        const Rational nab = Rational(signs[p] * (q + 1));
        const Weight c = -add_weights(a, b);
        const Rational k = nab / rs.norm2(c);
        const Weight tri[3] = {a, b, c};
        for (int r = 0; r < 3; ++r) {
            const Weight& u = tri[r];
            const Weight& v = tri[(r + 1) % 3];
            const Weight& w = tri[(r + 2) % 3];
            const Rational val = k * rs.norm2(w);
            const std::size_t iu = rs.index_of(u), iv = rs.index_of(v);
            const std::size_t nu = rs.index_of(-u), nv = rs.index_of(-v);
            n[{iu, iv}] = val;
            n[{iv, iu}] = -val;
            n[{nu, nv}] = -val;
            n[{nv, nu}] = val;
        }
    }
    return n;
}

inline std::size_t chevalley_sign_count(const RootSystem& rs)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < rs.positive.size(); ++i)
        for (std::size_t j = i + 1; j < rs.positive.size(); ++j)
            if (rs.is_root(add_weights(rs.positive[i], rs.positive[j])))
                ++count;
    return count;
}

/// Complex (split) Chevalley algebra over Q: basis H_1..H_rank, E_r for all roots.
inline LieAlgebra<Rational> chevalley_algebra(const RootSystem& rs, const std::map<RootPair, Rational>& n)
{
    const std::size_t rk = rs.rank;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < rk; ++j)
        labels.push_back("H_" + rs.simple_names[j]);
    for (const auto& r : rs.roots)
        labels.push_back("E_" + rs.label(r));
    LieAlgebra<Rational> a("chevalley_" + rs.name, labels);
    const std::size_t dim = labels.size();
    for (std::size_t ri = 0; ri < rs.roots.size(); ++ri) {
        const Weight& r = rs.roots[ri];
        const Vector<Rational> gr = rs.gram * r;
        for (std::size_t j = 0; j < rk; ++j) {
            Vector<Rational> v(dim, Rational(0));
            v[rk + ri] = gr[j];
            a.set_bracket(j, rk + ri, v);
        }
    }
    for (std::size_t ri = 0; ri < rs.roots.size(); ++ri)
        for (std::size_t si = ri + 1; si < rs.roots.size(); ++si) {
            const Weight& r = rs.roots[ri];
            const Weight& s = rs.roots[si];
            Vector<Rational> v(dim, Rational(0));
            if (s == -r) {
                const Rational f = 2 / rs.norm2(r);
                for (std::size_t j = 0; j < rk; ++j)
                    v[j] = f * r[j];
            } else {
                const std::size_t t = rs.index_of(add_weights(r, s));
                if (t < rs.roots.size())
                    v[rk + t] = n.at({ri, si});
            }
            a.set_bracket(rk + ri, rk + si, v);
        }
    return a;
}

} // namespace detail

/// Compact real form of the complex simple algebra with root system `rs`,
/// on the basis (H_1..H_rank, U_r, V_r for r positive) with <.,.> = -B.
/// The Cartan basis is the set of elements dual to the simple roots, so a
/// root r corresponds to the Cartan element with coordinates r, and
/// [H,U_r] = <r,H> V_r, [H,V_r] = -<r,H> U_r, [U_r,V_r] = r.
/// Signs of the Chevalley constants are taken from the first sign vector
/// (in lexicographic order, + before -) whose algebras pass validation.
/// Needs square roots of ratios of root lengths; T = Rational throws
/// std::domain_error when they are irrational.
template <class T>
AlgebraPtr<T> build_compact_from_rootsystem(const RootSystem& rs)
{
    const std::size_t rk = rs.rank;
    const std::size_t np = rs.positive.size();
    const std::size_t dim = rk + 2 * np;
    const Matrix<Rational> gb = rs.minus_b_gram();
    auto norm2 = [&](const Weight& w) { return bilinear(gb, w, w); };

    std::vector<std::string> labels;
    for (std::size_t j = 0; j < rk; ++j)
        labels.push_back("H_" + rs.simple_names[j]);
    std::vector<RootPlane> planes;
    for (std::size_t i = 0; i < np; ++i) {
        const std::string l = rs.label(rs.positive[i]);
        labels.push_back("U_" + l);
        labels.push_back("V_" + l);
        planes.push_back(RootPlane{l, rs.positive[i], rk + 2 * i, rk + 2 * i + 1});
    }
    std::vector<std::size_t> cartan(rk);
    for (std::size_t j = 0; j < rk; ++j)
        cartan[j] = j;

    // |r||s| / (2|t|) as an element of T
    auto coeff = [&](const Weight& r, const Weight& s, const Weight& t) {
        const Rational q = norm2(r) * norm2(s) / norm2(t);
        return scalar_traits<T>::sqrt(from_rational<T>(q)) / from_int<T>(2);
    };

    const std::size_t nsigns = detail::chevalley_sign_count(rs);
    std::string last_error = "no sign vector tried";
    for (unsigned long code = 0; code < (1UL << nsigns); ++code) {
        std::vector<int> signs(nsigns);
        for (std::size_t p = 0; p < nsigns; ++p)
            signs[p] = (code >> (nsigns - 1 - p) & 1UL) ? -1 : 1;
        const auto n = detail::chevalley_constants(rs, signs);
        bool ok = false;
        detail::chevalley_algebra(rs, n).jacobi_defect(&ok);
        if (!ok) {
            last_error = "complex Chevalley algebra fails Jacobi";
            continue;
        }

        auto a = std::make_shared<LieAlgebra<T>>(rs.name, labels);
        auto idx_root = [&](const Weight& w) { return rs.index_of(w); };
        auto add_u = [&](Vector<T>& v, const Weight& g, const T& c) {
            if (!rs.is_root(g))
                return;
            if (rs.is_positive(g))
                v[planes[rs.positive_index(g)].u] += c;
            else
                v[planes[rs.positive_index(-g)].u] -= c;
        };
        auto add_v = [&](Vector<T>& v, const Weight& g, const T& c) {
            if (!rs.is_root(g))
                return;
            const Weight p = rs.is_positive(g) ? g : -g;
            v[planes[rs.positive_index(p)].v] += c;
        };
        auto nval = [&](const Weight& x, const Weight& y) -> T {
            return from_rational<T>(n.at({idx_root(x), idx_root(y)}));
        };

        for (std::size_t i = 0; i < np; ++i) {
            const Weight& r = rs.positive[i];
            const Vector<Rational> gr = gb * r;
            for (std::size_t j = 0; j < rk; ++j) {
                Vector<T> v(dim, T(0));
                v[planes[i].v] = from_rational<T>(gr[j]);
                a->set_bracket(j, planes[i].u, v);
                Vector<T> w(dim, T(0));
                w[planes[i].u] = from_rational<T>(-gr[j]);
                a->set_bracket(j, planes[i].v, w);
            }
            Vector<T> h(dim, T(0));
            for (std::size_t j = 0; j < rk; ++j)
                h[j] = from_rational<T>(r[j]);
            a->set_bracket(planes[i].u, planes[i].v, h);
        }
        for (std::size_t i = 0; i < np; ++i)
            for (std::size_t j = 0; j < np; ++j) {
                if (i == j)
                    continue;
                const Weight& r = rs.positive[i];
                const Weight& s = rs.positive[j];
                const Weight sum = detail::add_weights(r, s);
                const Weight diff = detail::add_weights(r, s, -1);
                const bool has_sum = rs.is_root(sum);
                const bool has_diff = rs.is_root(diff);
                const T cs = has_sum ? T(coeff(r, s, sum) * nval(r, s)) : T(0);
                const T cd = has_diff ? T(coeff(r, s, diff) * nval(r, -s)) : T(0);
                // [U_r, V_s] for every ordered pair
                Vector<T> uv(dim, T(0));
                add_v(uv, sum, cs);
                add_v(uv, diff, cd);
                a->set_bracket(planes[i].u, planes[j].v, uv);
                if (i < j) {
                    Vector<T> uu(dim, T(0));
                    add_u(uu, sum, cs);
                    add_u(uu, diff, -cd);
                    a->set_bracket(planes[i].u, planes[j].u, uu);
                    Vector<T> vv(dim, T(0));
                    add_u(vv, sum, -cs);
                    add_u(vv, diff, -cd);
                    a->set_bracket(planes[i].v, planes[j].v, vv);
                }
            }
        Matrix<T> g(dim, dim);
        for (std::size_t x = 0; x < rk; ++x)
            for (std::size_t y = 0; y < rk; ++y)
                g(x, y) = from_rational<T>(gb(x, y));
        for (std::size_t x = rk; x < dim; ++x)
            g(x, x) = T(1);
        a->set_inner(g);
        a->set_lambda(Rational(1), "minusB");
        a->set_cartan(cartan);
        a->set_root_planes(planes);
        try {
            a->validate();
        } catch (const ConstructionError& e) {
            last_error = e.what();
            continue;
        }
        return a;
    }
    throw ConstructionError("build_compact_from_rootsystem(" + rs.name + "): " + last_error);
}

/// g2 in exact arithmetic over Q(sqrt 3).
inline AlgebraPtr<Surd3> build_g2_exact() { return build_compact_from_rootsystem<Surd3>(build_g2()); }

/// Abelian algebra R^n with a diagonal inner product.
template <class T>
AlgebraPtr<T> build_abelian(const std::vector<std::string>& labels, const Vector<T>& norms)
{
    auto a = std::make_shared<LieAlgebra<T>>("abelian", labels);
    a->set_inner(Matrix<T>::diagonal(norms));
    a->set_lambda(std::nullopt, "custom");
    a->validate();
    return a;
}

/// Direct sum a (+) b with the orthogonal sum of inner products.
template <class T>
AlgebraPtr<T> direct_sum(const LieAlgebra<T>& a, const LieAlgebra<T>& b)
{
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    auto s = std::make_shared<LieAlgebra<T>>(a.name() + "+" + b.name(), labels);
    const std::size_t na = a.dim(), n = labels.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector<T> v(n, T(0));
            const bool in_a = j < na, in_b = i >= na;
            if (!in_a && !in_b)
                continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (in_a && k < na)
                    v[k] = a.structure(i, j, k);
                else if (in_b && k >= na)
                    v[k] = b.structure(i - na, j - na, k - na);
            }
            s->set_bracket(i, j, v);
        }
    Matrix<T> g(n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            g(i, j) = a.inner()(i, j);
    for (std::size_t i = na; i < n; ++i)
        for (std::size_t j = na; j < n; ++j)
            g(i, j) = b.inner()(i - na, j - na);
    s->set_inner(g);
    s->set_lambda(std::nullopt, "custom");
    std::vector<std::size_t> cartan = a.cartan_indices();
    for (auto c : b.cartan_indices())
        cartan.push_back(c + na);
    s->set_cartan(cartan);
    s->set_root_planes(a.root_planes());
    s->validate();
    return s;
}

/// Embeds a vector of the first summand into a direct sum.
template <class T>
Vector<T> embed(const Vector<T>& x, std::size_t offset, std::size_t total)
{
    Vector<T> v(total, T(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        v[offset + i] = x[i];
    return v;
}

} // namespace gometrics

#include "gometrics/subspace.hpp"

#endif // GOMETRICS_LIEALG_HPP
