#ifndef GOMETRICS_GOCHECK_HPP
#define GOMETRICS_GOCHECK_HPP

#include "gometrics/metrics.hpp"

#include <cstdint>
#include <functional>
#include <random>

namespace gometrics {

struct Tolerances {
    double feas = 1e-9;   // feasible iff relative residual <= feas
    double infeas = 1e-3; // infeasible needs relative residual >= infeas ...
    double sigma = 1e-6;  // ... and smallest nonzero singular value >= sigma

    void validate() const
    {
        if (!(feas > 0 && infeas > 0 && sigma > 0))
            throw std::invalid_argument("tolerances must be positive");
        if (!(feas < infeas))
            throw std::invalid_argument("feasibility tolerance must be below the infeasibility threshold");
    }
};

enum class Verdict { feasible, infeasible, indeterminate };
enum class Overall { go_confirmed_on_samples, non_go_certified, indeterminate };
enum class Formulation { direct, reduced, normal_transitive, lie_group };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::infeasible: return "infeasible";
    default: return "indeterminate";
    }
}

inline const char* to_string(Overall o)
{
    switch (o) {
    case Overall::go_confirmed_on_samples: return "go_confirmed_on_samples";
    case Overall::non_go_certified: return "non_go_certified";
    default: return "indeterminate";
    }
}

inline const char* to_string(Formulation f)
{
    switch (f) {
    case Formulation::direct: return "direct";
    case Formulation::reduced: return "reduced";
    case Formulation::normal_transitive: return "normal_transitive";
    default: return "lie_group";
    }
}

/// Triple (g, h, m) with m the <.,.>-complement of the subalgebra h.
template <class T>
struct ReductiveSpace {
    AlgebraPtr<T> algebra;
    Subspace<T> h;
    Subspace<T> m;

    void validate() const
    {
        if (!is_subalgebra(h))
            throw std::invalid_argument("reductive space: h is not a subalgebra");
        if (!are_orthogonal(h, m))
            throw std::invalid_argument("reductive space: h and m are not orthogonal");
        if (h.dim() + m.dim() != algebra->dim())
            throw std::invalid_argument("reductive space: h + m is not the whole algebra");
        if (!m.contains(module_product(h, m)))
            throw std::invalid_argument("reductive space: [h, m] is not inside m");
    }
};

template <class T>
ReductiveSpace<T> make_reductive_space(const Subspace<T>& h)
{
    ReductiveSpace<T> s{h.algebra(), h, orthogonal_complement(h)};
    s.validate();
    return s;
}

/// Linear system M z = b. `frame` maps residual vectors into a <.,.>-orthonormal
/// frame, so float residuals and singular values are measured geometrically.
/// `scale` is the size b would have without cancellation; a float b below
/// kRoundoffFloor * scale is rounding noise, and residuals are then taken
/// relative to `scale` instead of |b|.
template <class T>
struct LinearSystem {
    Matrix<T> matrix;
    Vector<T> rhs;
    Matrix<double> frame;
    double scale = 0;
};

inline constexpr double kRoundoffFloor = 1e-12;

/// Outcome for one tangent vector.
template <class T>
struct SampleResult {
    Vector<T> x;
    Verdict verdict = Verdict::indeterminate;
    double residual = 0;
    std::optional<double> sigma_min;
    std::optional<Vector<T>> witness; // coefficients of the unknowns
    bool witness_verified = false;
    std::string decided_by; // "exact_rank", "double", "long_double"
};

template <class T>
struct GOCertificate {
    Formulation mode = Formulation::direct;
    std::uint64_t seed = 0;
    Tolerances tolerances;
    bool exact = false;
    std::optional<std::size_t> kmax_dim;
    std::vector<std::string> unknowns;
    std::vector<SampleResult<T>> samples;
    Overall overall = Overall::indeterminate;
};

namespace detail {

inline Verdict classify(double residual, const std::optional<double>& sigma, const Tolerances& tol)
{
    if (residual <= tol.feas)
        return Verdict::feasible;
    if (residual >= tol.infeas && (!sigma || *sigma >= tol.sigma))
        return Verdict::infeasible;
    return Verdict::indeterminate;
}

template <class T>
Matrix<double> framed(const Matrix<double>& frame, const Matrix<T>& m)
{
    return frame * convert<double>(m);
}

inline double norm2(const Vector<double>& v)
{
    double s = 0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

/// |x| |A x| max|c_ij^k|, a bound for the size of brackets built from x and A x.
template <class T>
double problem_scale(const LieAlgebra<T>& alg, const Vector<T>& x, const Vector<T>& ax)
{
    double c = 0;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            for (std::size_t k = 0; k < alg.dim(); ++k)
                c = std::max(c, std::abs(to_double(alg.structure(i, j, k))));
    const double nx = std::sqrt(std::max(0.0, to_double(alg.inner(x, x))));
    const double nax = std::sqrt(std::max(0.0, to_double(alg.inner(ax, ax))));
    return nx * nax * std::max(c, 1.0);
}

/// <.,.>-orthonormal coordinates of g: y = L^T x.
template <class T>
Matrix<double> orthonormal_frame(const LieAlgebra<T>& alg)
{
    return cholesky(convert<double>(alg.inner())).transpose();
}

/// Frame for rows indexed by an orthogonal basis Y of a subspace, row = <v, Y>.
template <class T>
Matrix<double> row_frame(const Subspace<T>& s)
{
    Vector<double> d;
    for (const auto& y : s.basis())
        d.push_back(1.0 / std::sqrt(to_double(s.algebra()->inner(y, y))));
    return Matrix<double>::diagonal(d);
}

} // namespace detail

/// Decides feasibility of one system; `check` recomputes the residual of a
/// witness from its geometric definition (relative, in the same frame).
template <class T>
SampleResult<T> decide(const LinearSystem<T>& sys, const Tolerances& tol,
                       const std::function<double(const Vector<T>&, bool*)>& check)
{
    SampleResult<T> out;
    const Matrix<double> md = detail::framed(sys.frame, sys.matrix);
    const Vector<double> bd = sys.frame * convert<double>(sys.rhs);
    if constexpr (is_exact_v<T>) {
        const auto ls = least_squares(sys.matrix, sys.rhs);
        out.decided_by = "exact_rank";
        if (*ls.consistent) {
            out.verdict = Verdict::feasible;
            out.residual = 0;
            out.witness = ls.solution;
            bool zero = false;
            check(ls.solution, &zero);
            out.witness_verified = zero;
            const auto lsd = least_squares(md, bd);
            out.sigma_min = lsd.sigma_min;
        } else {
            out.verdict = Verdict::infeasible;
            const auto lsd = least_squares(md, bd);
            out.residual = lsd.relative_residual;
            out.sigma_min = lsd.sigma_min;
        }
        return out;
    } else {
        const double bnorm = detail::norm2(bd);
        auto rel = [&](double r) { return bnorm >= kRoundoffFloor * sys.scale ? r : r * bnorm / sys.scale; };
        auto ls = least_squares(md, bd);
        out.decided_by = "double";
        out.residual = rel(ls.relative_residual);
        out.sigma_min = ls.sigma_min;
        out.verdict = detail::classify(out.residual, ls.sigma_min, tol);
        Vector<T> z = convert<T>(ls.solution);
        if (out.verdict == Verdict::indeterminate) {
            const auto ext = least_squares_extended(md, bd);
            out.decided_by = "long_double";
            out.residual = rel(ext.relative_residual);
            out.sigma_min = ext.sigma_min;
            out.verdict = detail::classify(out.residual, ext.sigma_min, tol);
            z = convert<T>(Vector<double>(ext.solution.begin(), ext.solution.end()));
        }
        if (out.verdict == Verdict::feasible) {
            out.witness = z;
            const double r = check(z, nullptr);
            out.witness_verified = r <= tol.feas;
            if (!out.witness_verified)
                out.verdict = Verdict::indeterminate;
        }
        return out;
    }
}

namespace detail {

/// |r| / |b| in frame coordinates, or |r| / scale when b is rounding noise.
inline double relative(const Vector<double>& r, const Vector<double>& b, double scale)
{
    const double nb = norm2(b);
    const double den = nb >= kRoundoffFloor * scale ? nb : scale;
    if (den == 0)
        return norm2(r);
    return norm2(r) / den;
}

template <class T>
void require_in(const Subspace<T>& s, const Vector<T>& x, const char* what)
{
    if (!s.contains(x))
        throw std::invalid_argument(std::string(what) + ": vector is not in m");
}

} // namespace detail

/// Geodesic lemma: Z in h with ([X+Z, Y]_m, X) = 0 for all Y in m.
template <class T>
SampleResult<T> go_feasible_direct(const ReductiveSpace<T>& s, const MetricEndomorphism<T>& metric,
                                   const Vector<T>& x, const Tolerances& tol = {})
{
    detail::require_in(s.m, x, "go_feasible_direct");
    const auto& alg = *s.algebra;
    const Vector<T> ax = metric.apply(x);
    const auto& ys = s.m.basis();
    const auto& zs = s.h.basis();
    LinearSystem<T> sys{Matrix<T>(ys.size(), zs.size()), Vector<T>(ys.size()), detail::row_frame(s.m),
                        detail::problem_scale(alg, x, ax)};
    for (std::size_t r = 0; r < ys.size(); ++r) {
        for (std::size_t c = 0; c < zs.size(); ++c)
            sys.matrix(r, c) = alg.inner(alg.bracket(zs[c], ys[r]), ax);
        sys.rhs[r] = -alg.inner(alg.bracket(x, ys[r]), ax);
    }
    auto check = [&](const Vector<T>& z, bool* zero) {
        const Vector<T> xz = x + s.h.combine(z);
        Vector<T> res(ys.size());
        for (std::size_t r = 0; r < ys.size(); ++r)
            res[r] = alg.inner(alg.bracket(xz, ys[r]), ax);
        if (zero)
            *zero = all_zero_exact(res);
        return detail::relative(sys.frame * convert<double>(res), sys.frame * convert<double>(sys.rhs),
                                sys.scale);
    };
    auto out = decide<T>(sys, tol, check);
    out.x = x;
    return out;
}

/// The operator Y -> [U, Y]_m on g coordinates.
template <class T>
Matrix<T> l_operator(const ReductiveSpace<T>& s, const Vector<T>& u)
{
    return s.m.projector() * s.algebra->ad(u);
}

/// Reduced criterion: V in h and t_j with ([X+V,Y]_m, X) + sum t_j (L_j(Y), X) = 0.
template <class T>
SampleResult<T> go_feasible_reduced(const ReductiveSpace<T>& s, const MetricEndomorphism<T>& metric,
                                    const std::vector<Matrix<T>>& ops, const Vector<T>& x, const Tolerances& tol = {})
{
    detail::require_in(s.m, x, "go_feasible_reduced");
    const auto& alg = *s.algebra;
    const auto& ys = s.m.basis();
    for (const auto& l : ops)
        for (const auto& y1 : ys)
            for (const auto& y2 : ys) {
                const T v = metric.metric(l * y1, y2) + metric.metric(y1, l * y2);
                const bool bad = is_exact_v<T> ? !is_zero_exact(v) : std::abs(to_double(v)) > 1e-10;
                if (bad)
                    throw std::invalid_argument("go_feasible_reduced: operator is not skew for the metric");
            }
    const Vector<T> ax = metric.apply(x);
    const auto& zs = s.h.basis();
    const std::size_t nu = zs.size() + ops.size();
    LinearSystem<T> sys{Matrix<T>(ys.size(), nu), Vector<T>(ys.size()), detail::row_frame(s.m),
                        detail::problem_scale(alg, x, ax)};
    for (std::size_t r = 0; r < ys.size(); ++r) {
        for (std::size_t c = 0; c < zs.size(); ++c)
            sys.matrix(r, c) = alg.inner(alg.bracket(zs[c], ys[r]), ax);
        for (std::size_t j = 0; j < ops.size(); ++j)
            sys.matrix(r, zs.size() + j) = alg.inner(ops[j] * ys[r], ax);
        sys.rhs[r] = -alg.inner(alg.bracket(x, ys[r]), ax);
    }
    auto check = [&](const Vector<T>& z, bool* zero) {
        Vector<T> hz(zs.size());
        for (std::size_t c = 0; c < zs.size(); ++c)
            hz[c] = z[c];
        const Vector<T> xv = x + s.h.combine(hz);
        Vector<T> res(ys.size());
        for (std::size_t r = 0; r < ys.size(); ++r) {
            Vector<T> ly(alg.dim(), T(0));
            for (std::size_t j = 0; j < ops.size(); ++j)
                axpy(z[zs.size() + j], Vector<T>(ops[j] * ys[r]), ly);
            res[r] = alg.inner(Vector<T>(alg.bracket(xv, ys[r]) + ly), ax);
        }
        if (zero)
            *zero = all_zero_exact(res);
        return detail::relative(sys.frame * convert<double>(res), sys.frame * convert<double>(sys.rhs),
                                sys.scale);
    };
    auto out = decide<T>(sys, tol, check);
    out.x = x;
    return out;
}

/// c_g(h) cap m.
template <class T>
Subspace<T> centralizer_in_m(const ReductiveSpace<T>& s)
{
    return intersection(centralizer(s.h), s.m);
}

/// Normal transitive criterion: V in h, W in c_g(h) cap m with [A X, X+V+W] in h.
/// `k` is c_g(h) cap m (pass it when checking many vectors).
template <class T>
SampleResult<T> go_normal_transitive(const ReductiveSpace<T>& s, const MetricEndomorphism<T>& metric,
                                     const Vector<T>& x, const Tolerances& tol = {},
                                     const std::optional<Subspace<T>>& k = std::nullopt)
{
    detail::require_in(s.m, x, "go_normal_transitive");
    const auto& alg = *s.algebra;
    const Subspace<T> kk = k ? *k : centralizer_in_m(s);
    std::vector<Vector<T>> unknowns = s.h.basis();
    unknowns.insert(unknowns.end(), kk.basis().begin(), kk.basis().end());
    const Vector<T> ax = metric.apply(x);
    const auto& ys = s.m.basis();
    LinearSystem<T> sys{Matrix<T>(ys.size(), unknowns.size()), Vector<T>(ys.size()), detail::row_frame(s.m),
                        detail::problem_scale(alg, x, ax)};
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
        const Vector<T> br = alg.bracket(ax, unknowns[c]);
        for (std::size_t r = 0; r < ys.size(); ++r)
            sys.matrix(r, c) = alg.inner(br, ys[r]);
    }
    const Vector<T> base = alg.bracket(ax, x);
    for (std::size_t r = 0; r < ys.size(); ++r)
        sys.rhs[r] = -alg.inner(base, ys[r]);
    auto check = [&](const Vector<T>& z, bool* zero) {
        Vector<T> full = x;
        for (std::size_t c = 0; c < unknowns.size(); ++c)
            axpy(z[c], unknowns[c], full);
        const Vector<T> u = alg.bracket(ax, full);
        Vector<T> res(ys.size());
        for (std::size_t r = 0; r < ys.size(); ++r)
            res[r] = alg.inner(u, ys[r]);
        if (zero)
            *zero = all_zero_exact(res);
        return detail::relative(sys.frame * convert<double>(res), sys.frame * convert<double>(sys.rhs),
                                sys.scale);
    };
    auto out = decide<T>(sys, tol, check);
    out.x = x;
    return out;
}

/// Lie group criterion at one X: W in k with [A X, X + W] = 0.
template <class T>
SampleResult<T> lie_group_feasible(const MetricEndomorphism<T>& metric, const Subspace<T>& k, const Vector<T>& x,
                                   const Tolerances& tol = {})
{
    const auto& alg = *metric.algebra();
    const std::size_t n = alg.dim();
    const Vector<T> ax = metric.apply(x);
    const auto& ws = k.basis();
    LinearSystem<T> sys{Matrix<T>(n, ws.size()), Vector<T>(n), detail::orthonormal_frame(alg),
                        detail::problem_scale(alg, x, ax)};
    for (std::size_t c = 0; c < ws.size(); ++c) {
        const Vector<T> br = alg.bracket(ax, ws[c]);
        for (std::size_t r = 0; r < n; ++r)
            sys.matrix(r, c) = br[r];
    }
    const Vector<T> base = alg.bracket(ax, x);
    for (std::size_t r = 0; r < n; ++r)
        sys.rhs[r] = -base[r];
    auto check = [&](const Vector<T>& z, bool* zero) {
        const Vector<T> res = alg.bracket(ax, Vector<T>(x + k.combine(z)));
        if (zero)
            *zero = all_zero_exact(res);
        return detail::relative(sys.frame * convert<double>(res), sys.frame * convert<double>(sys.rhs),
                                sys.scale);
    };
    auto out = decide<T>(sys, tol, check);
    out.x = x;
    return out;
}

template <class T>
Overall aggregate(const std::vector<SampleResult<T>>& samples)
{
    bool indeterminate = false;
    for (const auto& s : samples) {
        if (s.verdict == Verdict::infeasible)
            return Overall::non_go_certified;
        if (s.verdict == Verdict::indeterminate)
            indeterminate = true;
    }
    return indeterminate ? Overall::indeterminate : Overall::go_confirmed_on_samples;
}

enum class SampleStrategy { uniform_sphere, per_block, cross_block, all_blocks };

namespace detail {

template <class T>
Vector<T> random_in(const Subspace<T>& s, std::mt19937_64& rng)
{
    const std::size_t d = s.dim();
    Vector<T> coeffs(d);
    if constexpr (is_exact_v<T>) {
        std::uniform_int_distribution<int> dist(-3, 3);
        bool any = false;
        while (!any) {
            for (auto& c : coeffs) {
                const int v = dist(rng);
                c = from_int<T>(v);
                any = any || v != 0;
            }
        }
    } else {
        std::normal_distribution<double> dist(0.0, 1.0);
        double norm = 0;
        while (norm < 1e-3) {
            norm = 0;
            for (auto& c : coeffs) {
                c = static_cast<T>(dist(rng));
                norm += to_double(c) * to_double(c);
            }
        }
        // float bases are orthonormal, so this gives a unit vector
        for (auto& c : coeffs)
            c = c / static_cast<T>(std::sqrt(norm));
    }
    return s.combine(coeffs);
}

template <class T>
Vector<T> normalized(const LieAlgebra<T>& alg, Vector<T> v)
{
    if constexpr (!is_exact_v<T>) {
        const double n = std::sqrt(to_double(alg.inner(v, v)));
        for (auto& c : v)
            c = c / static_cast<T>(n);
    }
    return v;
}

} // namespace detail

/// Deterministic tangent samples over a decomposition of m (or g).
/// `count` applies to uniform_sphere and all_blocks.
template <class T>
std::vector<Vector<T>> sample_tangent_vectors(const ModuleDecomposition<T>& d, SampleStrategy strategy,
                                              std::uint64_t seed, std::size_t count = 1)
{
    std::mt19937_64 rng(seed);
    const auto& alg = *d.algebra;
    std::vector<Vector<T>> out;
    switch (strategy) {
    case SampleStrategy::uniform_sphere:
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(detail::random_in(d.ambient, rng));
        break;
    case SampleStrategy::per_block:
        for (const auto& b : d.blocks)
            out.push_back(detail::random_in(b, rng));
        break;
    case SampleStrategy::cross_block:
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                out.push_back(detail::normalized(
                    alg, Vector<T>(detail::random_in(d.blocks[i], rng) + detail::random_in(d.blocks[j], rng))));
        break;
    case SampleStrategy::all_blocks:
        for (std::size_t i = 0; i < count; ++i) {
            Vector<T> v(alg.dim(), T(0));
            for (const auto& b : d.blocks)
                v = v + detail::random_in(b, rng);
            out.push_back(detail::normalized(alg, v));
        }
        break;
    }
    return out;
}

/// per_block, cross_block, then `generic` all-blocks and `generic` uniform samples.
template <class T>
std::vector<Vector<T>> standard_samples(const ModuleDecomposition<T>& d, std::uint64_t seed, std::size_t generic)
{
    std::vector<Vector<T>> out;
    auto add = [&](std::vector<Vector<T>> v) { out.insert(out.end(), v.begin(), v.end()); };
    add(sample_tangent_vectors(d, SampleStrategy::per_block, seed));
    add(sample_tangent_vectors(d, SampleStrategy::cross_block, seed + 1));
    add(sample_tangent_vectors(d, SampleStrategy::all_blocks, seed + 2, generic));
    add(sample_tangent_vectors(d, SampleStrategy::uniform_sphere, seed + 3, generic));
    return out;
}

/// Lie group GO check: k_max from the metric, then [A X, X + W] = 0 over W in k_max
/// for each sample. One certified infeasible sample proves the metric is not GO.
template <class T>
GOCertificate<T> lie_group_go_check(const MetricEndomorphism<T>& metric, const std::vector<Vector<T>>& samples,
                                    std::uint64_t seed, const Tolerances& tol = {})
{
    tol.validate();
    GOCertificate<T> cert;
    cert.mode = Formulation::lie_group;
    cert.seed = seed;
    cert.tolerances = tol;
    cert.exact = is_exact_v<T>;
    const Subspace<T> k = max_right_isometry_algebra(metric);
    cert.kmax_dim = k.dim();
    for (std::size_t i = 0; i < k.dim(); ++i)
        cert.unknowns.push_back("w" + std::to_string(i + 1));
    for (const auto& x : samples)
        cert.samples.push_back(lie_group_feasible(metric, k, x, tol));
    cert.overall = aggregate(cert.samples);
    return cert;
}

/// Runs a per-sample checker over samples of m for a homogeneous space.
template <class T>
GOCertificate<T> homogeneous_go_check(const ReductiveSpace<T>& s, const MetricEndomorphism<T>& metric,
                                      Formulation mode, const std::vector<Vector<T>>& samples, std::uint64_t seed,
                                      const Tolerances& tol = {}, const std::vector<Matrix<T>>& ops = {})
{
    tol.validate();
    if (mode == Formulation::lie_group)
        throw std::invalid_argument("homogeneous_go_check: use lie_group_go_check for the Lie group case");
    GOCertificate<T> cert;
    cert.mode = mode;
    cert.seed = seed;
    cert.tolerances = tol;
    cert.exact = is_exact_v<T>;
    for (std::size_t i = 0; i < s.h.dim(); ++i)
        cert.unknowns.push_back("v" + std::to_string(i + 1));
    std::optional<Subspace<T>> k;
    if (mode == Formulation::normal_transitive) {
        k = centralizer_in_m(s);
        cert.kmax_dim = k->dim();
        for (std::size_t i = 0; i < k->dim(); ++i)
            cert.unknowns.push_back("w" + std::to_string(i + 1));
    }
    if (mode == Formulation::reduced)
        for (std::size_t i = 0; i < ops.size(); ++i)
            cert.unknowns.push_back("t" + std::to_string(i + 1));
    for (const auto& x : samples) {
        switch (mode) {
        case Formulation::direct: cert.samples.push_back(go_feasible_direct(s, metric, x, tol)); break;
        case Formulation::reduced: cert.samples.push_back(go_feasible_reduced(s, metric, ops, x, tol)); break;
        case Formulation::normal_transitive:
            cert.samples.push_back(go_normal_transitive(s, metric, x, tol, k));
            break;
        default: break;
        }
    }
    cert.overall = aggregate(cert.samples);
    return cert;
}

/// The space (g + k)/(h + diag k) for k = c_g(h) cap m, where k acts by
/// right translations. Its direct GO criterion is the GO property with
/// respect to the enlarged group. `lift` maps m into the new m.
template <class T>
struct ExtendedPresentation {
    ReductiveSpace<T> space;
    std::optional<MetricEndomorphism<T>> metric;
    std::function<Vector<T>(const Vector<T>&)> lift;
};

template <class T>
ExtendedPresentation<T> extend_by_centralizer(const ReductiveSpace<T>& s, const MetricEndomorphism<T>& metric)
{
    const auto& alg = *s.algebra;
    const Subspace<T> k = centralizer_in_m(s);
    const std::size_t n = alg.dim(), r = k.dim();
    std::vector<std::string> labels;
    Vector<T> norms;
    for (std::size_t i = 0; i < r; ++i) {
        labels.push_back("c" + std::to_string(i + 1));
        norms.push_back(alg.inner(k.basis()[i], k.basis()[i]));
    }
    const AlgebraPtr<T> g1 = r ? direct_sum(alg, *build_abelian<T>(labels, norms)) : s.algebra;
    auto up = [&](const Vector<T>& v) { return embed(v, 0, n + r); };
    std::vector<Vector<T>> hgens;
    for (const auto& b : s.h.basis())
        hgens.push_back(up(b));
    for (std::size_t i = 0; i < r; ++i) {
        Vector<T> d = up(k.basis()[i]);
        d[n + i] = T(1);
        hgens.push_back(d);
    }
    const Subspace<T> h1 = Subspace<T>::span(g1, hgens);
    ExtendedPresentation<T> out{make_reductive_space(h1), std::nullopt, {}};
    // y = y_perp + sum c_i k_i  ->  (y_perp, 0) + sum c_i (k_i, -e_i) / 2
    const auto kin = k;
    const auto algp = s.algebra;
    out.lift = [kin, algp, n, r](const Vector<T>& y) {
        Vector<T> v(n + r, T(0));
        Vector<T> perp = y;
        for (std::size_t i = 0; i < r; ++i) {
            const Vector<T>& ki = kin.basis()[i];
            const T c = algp->inner(y, ki) / algp->inner(ki, ki);
            axpy(T(-c), ki, perp);
            const T half = c / from_int<T>(2);
            for (std::size_t j = 0; j < n; ++j)
                v[j] += half * ki[j];
            v[n + i] -= half;
        }
        for (std::size_t j = 0; j < n; ++j)
            v[j] += perp[j];
        return v;
    };
    // pull back block coefficients along the lift
    const auto& d = metric.decomposition();
    std::vector<Subspace<T>> blocks;
    Vector<T> coeffs;
    for (std::size_t b = 0; b < d.size(); ++b) {
        std::vector<Vector<T>> gens;
        std::optional<T> ratio;
        for (const auto& y : d.blocks[b].basis()) {
            const Vector<T> ly = out.lift(y);
            const T q = metric.metric(y, y) / g1->inner(ly, ly);
            if (ratio && !approx_equal(*ratio, q))
                throw std::invalid_argument("extend_by_centralizer: block " + d.names[b] +
                                            " mixes centralizer and non-centralizer directions");
            ratio = q;
            gens.push_back(ly);
        }
        blocks.push_back(Subspace<T>::span(g1, gens));
        coeffs.push_back(*ratio);
    }
    out.metric = make_metric(make_decomposition(out.space.m, blocks, d.names), coeffs);
    return out;
}

} // namespace gometrics

#endif // GOMETRICS_GOCHECK_HPP
