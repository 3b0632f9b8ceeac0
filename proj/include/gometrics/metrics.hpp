#ifndef GOMETRICS_METRICS_HPP
#define GOMETRICS_METRICS_HPP

#include "gometrics/liealg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gometrics {

/// Relative tolerance for comparing metric coefficients in float mode.
inline constexpr double kCoefficientTolerance = 1e-9;

template <class T>
bool approx_equal(const T& a, const T& b)
{
    if constexpr (is_exact_v<T>) {
        return a == b;
    } else {
        const double x = to_double(a), y = to_double(b);
        return std::abs(x - y) <= kCoefficientTolerance * std::max({std::abs(x), std::abs(y), 1e-300});
    }
}

/// Vector is zero (exactly, or relative to `scale` in float mode).
template <class T>
bool negligible(const Vector<T>& v, double scale)
{
    if constexpr (is_exact_v<T>)
        return all_zero_exact(v);
    else
        return max_abs(v) <= kMembershipTolerance * std::max(scale, 1e-300);
}

/// Orthogonal splitting of an ambient subspace (g itself, or m) into named blocks.
template <class T>
struct ModuleDecomposition {
    AlgebraPtr<T> algebra;
    Subspace<T> ambient;
    std::vector<Subspace<T>> blocks;
    std::vector<std::string> names;

    std::size_t size() const { return blocks.size(); }

    std::size_t index_of(const std::string& name) const
    {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return i;
        throw std::invalid_argument("no block named '" + name + "'");
    }

    void validate() const
    {
        if (blocks.size() != names.size())
            throw std::invalid_argument("decomposition: names and blocks differ in number");
        std::size_t total = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].dim() == 0)
                throw std::invalid_argument("decomposition: block " + names[i] + " is zero");
            total += blocks[i].dim();
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                if (!are_orthogonal(blocks[i], blocks[j]))
                    throw std::invalid_argument("decomposition: blocks " + names[i] + " and " + names[j] +
                                                " are not orthogonal");
            if (!ambient.contains(blocks[i]))
                throw std::invalid_argument("decomposition: block " + names[i] + " leaves the ambient space");
        }
        if (total != ambient.dim())
            throw std::invalid_argument("decomposition: blocks do not span the ambient space");
    }
};

template <class T>
ModuleDecomposition<T> make_decomposition(Subspace<T> ambient, std::vector<Subspace<T>> blocks,
                                          std::vector<std::string> names)
{
    ModuleDecomposition<T> d{ambient.algebra(), std::move(ambient), std::move(blocks), std::move(names)};
    d.validate();
    return d;
}

/// Block-scalar operator A, (x, y) = <A x, y>, with coefficient coeffs[i] on block i.
/// A is stored on the whole algebra and vanishes on the complement of the ambient space.
template <class T>
class MetricEndomorphism {
public:
    MetricEndomorphism(ModuleDecomposition<T> d, Vector<T> coeffs) : d_(std::move(d)), coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != d_.size())
            throw std::invalid_argument("metric: expected " + std::to_string(d_.size()) + " coefficients, got " +
                                        std::to_string(coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (sign_of(coeffs_[i]) <= 0)
                throw std::invalid_argument("metric: coefficient for " + d_.names[i] + " must be positive");
        const std::size_t n = d_.algebra->dim();
        a_ = Matrix<T>(n, n);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            a_ = a_ + coeffs_[i] * d_.blocks[i].projector();
    }

    const ModuleDecomposition<T>& decomposition() const { return d_; }
    const AlgebraPtr<T>& algebra() const { return d_.algebra; }
    const Vector<T>& coeffs() const { return coeffs_; }
    const Matrix<T>& matrix() const { return a_; }

    Vector<T> apply(const Vector<T>& x) const { return a_ * x; }
    T metric(const Vector<T>& x, const Vector<T>& y) const { return d_.algebra->inner(apply(x), y); }

    /// Same decomposition, coefficients multiplied by s.
    MetricEndomorphism scaled_by(const T& s) const { return MetricEndomorphism(d_, scaled(s, coeffs_)); }

private:
    ModuleDecomposition<T> d_;
    Vector<T> coeffs_;
    Matrix<T> a_;
};

template <class T>
MetricEndomorphism<T> make_metric(const ModuleDecomposition<T>& d, const Vector<T>& coeffs)
{
    return MetricEndomorphism<T>(d, coeffs);
}

/// k splits as the sum of its intersections with the blocks, each an ideal
/// of k, and k preserves the complement of k in every block.
template <class T>
bool is_adapted(const Subspace<T>& k, const MetricEndomorphism<T>& m)
{
    if (!is_subalgebra(k))
        throw std::invalid_argument("is_adapted: not a subalgebra");
    if (k.dim() == 0)
        return true;
    const auto& d = m.decomposition();
    std::size_t total = 0;
    for (const auto& p : d.blocks) {
        const Subspace<T> ki = intersection(k, p);
        total += ki.dim();
        if (!ki.contains(module_product(k, ki)))
            return false;
        const Subspace<T> ci = orthogonal_complement(ki, p);
        if (!ci.contains(module_product(k, ci)))
            return false;
    }
    return total == k.dim();
}

/// {W in g : ad(W) A = A ad(W)}.
template <class T>
Subspace<T> max_right_isometry_algebra(const MetricEndomorphism<T>& m)
{
    const auto& alg = *m.algebra();
    const std::size_t n = alg.dim();
    if (m.decomposition().ambient.dim() != n)
        throw std::invalid_argument("max_right_isometry_algebra: metric must live on the whole algebra");
    const Matrix<T>& a = m.matrix();
    Matrix<T> sys(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix<T> adi = alg.ad_basis(i);
        const Matrix<T> c = adi * a - a * adi;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
                sys(r * n + s, i) = c(r, s);
    }
    return Subspace<T>::span(m.algebra(), nullspace(sys).columns());
}

/// A metric of the form x <.,.> on the complement of h plus scalar
/// multiples of <.,.> on pieces of h commuting with ad(h).
template <class T>
struct NaturallyReductiveForm {
    std::string label;
    Subspace<T> h;
    std::optional<T> x;                       // absent when h is everything
    std::vector<std::pair<std::string, T>> u; // metric blocks meeting h, with their coefficients
};

/// Candidate subalgebra with a display label.
template <class T>
struct Candidate {
    std::string label;
    Subspace<T> space;
};

/// Tests the naturally reductive form for one subalgebra h.
template <class T>
std::optional<NaturallyReductiveForm<T>> match_natural_form(const MetricEndomorphism<T>& m, const Candidate<T>& cand)
{
    const Subspace<T>& h = cand.space;
    if (!is_subalgebra(h))
        throw std::invalid_argument("detect_naturally_reductive: candidate " + cand.label + " is not a subalgebra");
    const auto& alg = *m.algebra();
    const double scale = std::max(1.0, max_abs(m.coeffs()));
    for (const auto& b : h.basis())
        if (!h.contains(m.apply(b)))
            return std::nullopt;
    const Subspace<T> comp = orthogonal_complement(h, m.decomposition().ambient);
    std::optional<T> x;
    for (const auto& b : comp.basis()) {
        const T val = alg.inner(m.apply(b), b) / alg.inner(b, b);
        if (!x)
            x = val;
        else if (!approx_equal(*x, val))
            return std::nullopt;
        if (!negligible(Vector<T>(m.apply(b) - scaled(val, b)), scale * (1.0 + max_abs(b))))
            return std::nullopt;
    }
    for (const auto& y : h.basis())
        for (const auto& z : h.basis()) {
            const Vector<T> lhs = m.apply(alg.bracket(y, z));
            const Vector<T> rhs = alg.bracket(y, m.apply(z));
            if (!negligible(Vector<T>(lhs - rhs), scale * (1.0 + max_abs(lhs))))
                return std::nullopt;
        }
    NaturallyReductiveForm<T> out{cand.label, h, x, {}};
    const auto& d = m.decomposition();
    for (std::size_t i = 0; i < d.size(); ++i)
        if (intersection(h, d.blocks[i]).dim() > 0)
            out.u.push_back({d.names[i], m.coeffs()[i]});
    return out;
}

/// First candidate on which the metric takes the naturally reductive form.
template <class T>
std::optional<NaturallyReductiveForm<T>> detect_naturally_reductive(const MetricEndomorphism<T>& m,
                                                                    const std::vector<Candidate<T>>& candidates)
{
    for (const auto& c : candidates)
        if (auto f = match_natural_form(m, c))
            return f;
    return std::nullopt;
}

/// Operator x P_comp + sum u_j P_(h cap block j) rebuilt from a form.
template <class T>
Matrix<T> reassemble(const NaturallyReductiveForm<T>& f, const MetricEndomorphism<T>& m)
{
    const auto& d = m.decomposition();
    const std::size_t n = m.algebra()->dim();
    Matrix<T> a(n, n);
    if (f.x)
        a = a + *f.x * orthogonal_complement(f.h, d.ambient).projector();
    for (const auto& [name, u] : f.u)
        a = a + u * intersection(f.h, d.blocks[d.index_of(name)]).projector();
    return a;
}

/// Sums of blocks that are subalgebras, in bitmask order, followed by the
/// full-rank subalgebras of closed symmetric root subsystems when a root
/// system is supplied. Duplicates are dropped.
template <class T>
std::vector<Candidate<T>> natural_reductive_candidates(const MetricEndomorphism<T>& m, const RootSystem* rs = nullptr)
{
    const auto& d = m.decomposition();
    std::vector<Candidate<T>> out;
    auto push = [&](std::string label, Subspace<T> s) {
        if (!is_subalgebra(s))
            return;
        for (const auto& c : out)
            if (c.space == s)
                return;
        out.push_back({std::move(label), std::move(s)});
    };
    const std::size_t nb = d.size();
    for (unsigned long mask = 1; mask < (1UL << nb); ++mask) {
        std::vector<Subspace<T>> parts;
        std::string label;
        for (std::size_t i = 0; i < nb; ++i)
            if (mask >> i & 1UL) {
                parts.push_back(d.blocks[i]);
                label += (label.empty() ? "" : "+") + d.names[i];
            }
        push(label, sum(parts));
    }
    if (rs) {
        for (const auto& a : all_closed_symmetric_subsets(*rs)) {
            std::string label = "t";
            for (const auto& r : a.positive_members())
                label += "+v[" + rs->label(r) + "]";
            push(label, subsystem_subalgebra(m.algebra(), a));
        }
    }
    return out;
}

} // namespace gometrics

#endif // GOMETRICS_METRICS_HPP
