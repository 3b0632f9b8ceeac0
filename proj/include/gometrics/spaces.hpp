#ifndef GOMETRICS_SPACES_HPP
#define GOMETRICS_SPACES_HPP

#include "gometrics/gocheck.hpp"
#include "gometrics/ricci.hpp"

#include <array>
#include <numeric>

namespace gometrics {

// ---------------------------------------------------------------------------
// Aloff-Wallach spaces W_{k,l} = SU(3)/S^1

/// W_{k,l} on the fixed su(3) basis. The isotropy generator is
/// Z = i diag(k, l, m) and the m4 direction is the unnormalized
/// X0 = i diag(l-m, m-k, k-l), whose unit multiple is f * X0.
template <class T>
struct AloffWallach {
    long k = 0, l = 0, m = 0;
    long L = 0;
    double f = 0;
    AlgebraPtr<T> algebra;
    Vector<T> z;
    Vector<T> x0;
    ReductiveSpace<T> space;
    ModuleDecomposition<T> blocks; // m1, m2, m3, m4 inside m

    /// W_{1,0} and W_{1,1} carry larger families of invariant metrics.
    bool excluded() const { return (k == 1 && l == 0) || (k == 1 && l == 1); }

    /// X_i for i = 0..6 (X_0 unnormalized, see above).
    Vector<T> basis_element(std::size_t i) const
    {
        if (i == 0)
            return x0;
        if (i > 6)
            throw std::out_of_range("AloffWallach: X index");
        return algebra->basis_vector(i + 1);
    }

    /// sum alpha_i X_i, alpha_0 being the coordinate on the unnormalized X_0.
    Vector<T> tangent(const Vector<T>& alpha) const
    {
        if (alpha.size() != 7)
            throw std::invalid_argument("AloffWallach::tangent: need 7 coordinates");
        Vector<T> v(8, T(0));
        for (std::size_t i = 0; i < 7; ++i)
            axpy(alpha[i], basis_element(i), v);
        return v;
    }
};

namespace detail {

/// a H1 + b H2 for the diagonal i diag(d1, d2, d3) with d1 + d2 + d3 = 0.
template <class T>
Vector<T> su3_diagonal(const Rational& d1, const Rational& d3)
{
    const Rational b = -d3 / 2;
    const Rational a = d1 - b;
    Vector<T> v(8, T(0));
    v[0] = from_rational<T>(a);
    v[1] = from_rational<T>(b);
    return v;
}

} // namespace detail

template <class T>
AloffWallach<T> aloff_wallach(long k, long l)
{
    if (k < 0 || l < 0)
        throw std::invalid_argument("aloff_wallach: k and l must be non-negative");
    if (k < l)
        throw std::invalid_argument("aloff_wallach: need k >= l");
    if (k == 0)
        throw std::invalid_argument("aloff_wallach: (k, l) = (0, 0)");
    if (std::gcd(k, l) != 1)
        throw std::invalid_argument("aloff_wallach: gcd(k, l) must be 1");
    AloffWallach<T> aw;
    aw.k = k;
    aw.l = l;
    aw.m = -k - l;
    aw.L = k * k + l * l + aw.m * aw.m;
    aw.f = std::sqrt(2.0 / (3.0 * static_cast<double>(aw.L)));
    aw.algebra = build_su3<T>();
    aw.z = detail::su3_diagonal<T>(Rational(k), Rational(aw.m));
    aw.x0 = detail::su3_diagonal<T>(Rational(l - aw.m), Rational(k - l));
    const auto& alg = *aw.algebra;

    if (k * k + l * l + aw.m * aw.m - k * l - k * aw.m - l * aw.m != 3 * aw.L / 2)
        throw ConstructionError("aloff_wallach: k^2+l^2+m^2-kl-km-ml != 3L/2");
    if (!(alg.inner(aw.x0, aw.x0) == from_rational<T>(Rational(3 * aw.L) / 2)))
        throw ConstructionError("aloff_wallach: |X0|^2 != 3L/2");

    const Subspace<T> h = Subspace<T>::span(aw.algebra, {aw.z});
    aw.space = make_reductive_space(h);
    auto x = [&](std::size_t i) { return aw.basis_element(i); };
    // [Z, X0] = 0 and the rotation table on m1, m2, m3
    const long rot[3] = {k - l, k - aw.m, l - aw.m};
    if (max_abs(alg.bracket(aw.z, aw.x0)) > 1e-12)
        throw ConstructionError("aloff_wallach: [Z, X0] != 0");
    for (std::size_t p = 0; p < 3; ++p) {
        const Vector<T> a = alg.bracket(aw.z, x(2 * p + 1));
        const Vector<T> b = alg.bracket(aw.z, x(2 * p + 2));
        const Vector<T> ea = scaled(from_int<T>(rot[p]), x(2 * p + 2));
        const Vector<T> eb = scaled(from_int<T>(-rot[p]), x(2 * p + 1));
        if (max_abs(Vector<T>(a - ea)) > 1e-12 || max_abs(Vector<T>(b - eb)) > 1e-12)
            throw ConstructionError("aloff_wallach: bracket table with Z does not hold");
    }
    std::vector<Subspace<T>> blocks = {Subspace<T>::span(aw.algebra, {x(1), x(2)}),
                                       Subspace<T>::span(aw.algebra, {x(3), x(4)}),
                                       Subspace<T>::span(aw.algebra, {x(5), x(6)}),
                                       Subspace<T>::span(aw.algebra, {x(0)})};
    for (const auto& b : blocks)
        if (!b.contains(module_product(h, b)))
            throw ConstructionError("aloff_wallach: block is not ad(h)-invariant");
    aw.blocks = make_decomposition(aw.space.m, blocks, {"m1", "m2", "m3", "m4"});
    return aw;
}

/// x1 <.,.>|m1 + x2 <.,.>|m2 + x3 <.,.>|m3 + x4 <.,.>|m4 in the su(3) gauge.
template <class T>
MetricEndomorphism<T> aw_metric(const AloffWallach<T>& aw, const T& x1, const T& x2, const T& x3, const T& x4)
{
    return make_metric(aw.blocks, Vector<T>{x1, x2, x3, x4});
}

template <class T>
void require_not_excluded(const AloffWallach<T>& aw)
{
    if (aw.excluded())
        throw ExcludedCaseError("W_{" + std::to_string(aw.k) + "," + std::to_string(aw.l) +
                                "} is excluded: its invariant metrics are not all of the 4-parameter diagonal form "
                                "and its isometry group need not be locally U(3)");
}

/// P = a2 a4 a5 - a2 a3 a6 + a1 a3 a5 + a1 a4 a6.
template <class T>
T aw_cubic(const Vector<T>& a)
{
    return T(a[2] * a[4] * a[5] - a[2] * a[3] * a[6] + a[1] * a[3] * a[5] + a[1] * a[4] * a[6]);
}

/// The three obstructions read off U = [X + V + W, A(X)]: with c_i the
/// coordinate of U on X_i, o1 = a2 c2 + a1 c1, o2 = a4 c4 + a3 c3,
/// o3 = a6 c6 + a5 c5. They do not depend on V + W in the Cartan subalgebra.
template <class T>
std::array<T, 3> aw_obstruction(const AloffWallach<T>& aw, const T& x1, const T& x2, const T& x3,
                                const Vector<T>& alpha, const Vector<T>& vw = {})
{
    const auto& alg = *aw.algebra;
    const MetricEndomorphism<T> metric = aw_metric(aw, x1, x2, x3, T(1));
    const Vector<T> x = aw.tangent(alpha);
    Vector<T> full = x;
    if (!vw.empty())
        full = full + vw;
    const Vector<T> u = alg.bracket(full, metric.apply(x));
    auto c = [&](std::size_t i) { return T(alg.inner(u, aw.basis_element(i)) / alg.inner(aw.basis_element(i), aw.basis_element(i))); };
    return {T(alpha[2] * c(2) + alpha[1] * c(1)), T(alpha[4] * c(4) + alpha[3] * c(3)),
            T(alpha[6] * c(6) + alpha[5] * c(5))};
}

/// V + W = i diag(beta, gamma, -beta-gamma) with beta = (x4/x - 1) a0 (l-m),
/// gamma = (x4/x - 1) a0 (m-k), a0 the coordinate on the unnormalized X0.
template <class T>
Vector<T> aw_closed_form_witness(const AloffWallach<T>& aw, const T& x, const T& x4, const Vector<T>& alpha)
{
    const T s = x4 / x - T(1);
    const T beta = s * alpha[0] * from_int<T>(aw.l - aw.m);
    const T gamma = s * alpha[0] * from_int<T>(aw.m - aw.k);
    // i diag(beta, gamma, -beta-gamma) = p H1 + q H2
    Vector<T> v(8, T(0));
    v[1] = (beta + gamma) / from_int<T>(2);
    v[0] = (beta - gamma) / from_int<T>(2);
    return v;
}

/// The operator Y -> [X0, Y]_m used by the reduced criterion.
template <class T>
Matrix<T> aw_reduced_operator(const AloffWallach<T>& aw)
{
    return l_operator(aw.space, aw.x0);
}

/// Points on which a polynomial of degree <= deg in `vars` variables is
/// determined: {0, +-e_i, e_i + e_j} for deg 2, the principal lattice
/// {a in N^vars : |a| <= deg} for other degrees.
inline std::vector<Vector<Rational>> unisolvent_points(std::size_t vars, int deg)
{
    std::vector<Vector<Rational>> pts;
    if (deg == 2) {
        pts.push_back(Vector<Rational>(vars, Rational(0)));
        for (std::size_t i = 0; i < vars; ++i)
            for (int s : {1, -1}) {
                Vector<Rational> p(vars, Rational(0));
                p[i] = s;
                pts.push_back(p);
            }
        for (std::size_t i = 0; i < vars; ++i)
            for (std::size_t j = i + 1; j < vars; ++j) {
                Vector<Rational> p(vars, Rational(0));
                p[i] = 1;
                p[j] = 1;
                pts.push_back(p);
            }
        return pts;
    }
    std::vector<int> a(vars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == vars) {
            Vector<Rational> p;
            for (int v : a)
                p.push_back(Rational(v));
            pts.push_back(p);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
        a[i] = 0;
    };
    rec(0, deg);
    return pts;
}

/// Deterministic rational point with small numerators and denominators.
inline Vector<Rational> random_rational_point(std::size_t vars, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    Vector<Rational> p;
    for (std::size_t i = 0; i < vars; ++i) {
        const int n = num(rng);
        p.push_back(Rational(n) / den(rng));
    }
    return p;
}

struct AWNonGoEntry {
    std::array<Rational, 4> x;
    Overall overall = Overall::indeterminate;
    std::size_t samples_checked = 0;
    Vector<Rational> certificate_alpha; // tangent vector with an exact infeasibility certificate
    bool obstruction_nonzero = false;   // the cubic obstruction is nonzero there
    bool contradiction = false;         // some sample had a nonzero obstruction but was solvable
};

struct AWGoEntry {
    Rational x, x4;
    std::size_t points_checked = 0;
    bool witness_identity = false; // [A X, X + V + W] = 0 on all points
    bool solver_matches = false;   // normal-transitive solver returns the closed form
};

struct AWClassification {
    long k = 0, l = 0;
    std::vector<AWNonGoEntry> non_go;
    std::vector<AWGoEntry> go;
    bool obstruction_identities = false;
    bool consistent = false;
    std::string conclusion;
};

inline std::vector<std::array<Rational, 4>> default_aw_non_go_grid()
{
    auto q = [](long p, long r = 1) -> Rational { return Rational(p) / r; };
    return {{q(1), q(2), q(3), q(1)}, {q(2), q(1), q(1), q(5)}, {q(1), q(1), q(2), q(1)},
            {q(3), q(2), q(1), q(1, 2)}, {q(1), q(2), q(2), q(3)}};
}

/// Checks the obstruction identities o_i = (x_j - x_k) P and o1 + o2 + o3 = 0
/// on a cubic-determining point set, and that they vanish identically exactly
/// when x1 = x2 = x3.
inline bool aw_obstruction_identities(const AloffWallach<Rational>& aw, const Rational& x1, const Rational& x2,
                                      const Rational& x3, std::uint64_t seed)
{
    auto pts = unisolvent_points(7, 3);
    for (auto& p : unisolvent_points(7, 2))
        pts.push_back(p);
    pts.push_back(random_rational_point(7, seed));
    bool any_nonzero = false;
    for (const auto& a : pts) {
        const auto o = aw_obstruction(aw, x1, x2, x3, a);
        const Rational p = aw_cubic(a);
        if (o[0] != (x2 - x3) * p || o[1] != (x3 - x1) * p || o[2] != (x1 - x2) * p)
            return false;
        if (o[0] + o[1] + o[2] != 0)
            return false;
        any_nonzero = any_nonzero || sgn(o[0]) != 0 || sgn(o[1]) != 0 || sgn(o[2]) != 0;
    }
    const bool equal = x1 == x2 && x2 == x3;
    return equal ? !any_nonzero : any_nonzero;
}

/// Exact classification report for W_{k,l}: non-GO certificates on the
/// grid, and the closed-form witness verified as a polynomial identity for
/// x1 = x2 = x3.
inline AWClassification aw_go_classify(long k, long l, std::uint64_t seed = 1,
                                       std::vector<std::array<Rational, 4>> grid = default_aw_non_go_grid(),
                                       std::size_t max_samples = 64)
{
    const AloffWallach<Rational> aw = aloff_wallach<Rational>(k, l);
    require_not_excluded(aw);
    AWClassification rep;
    rep.k = k;
    rep.l = l;
    const std::optional<Subspace<Rational>> kc = centralizer_in_m(aw.space);
    const Tolerances tol;

    bool ok = true;
    for (const auto& x : grid) {
        if (x[0] == x[1] && x[1] == x[2])
            throw std::invalid_argument("aw_go_classify: grid metrics need distinct x1, x2, x3");
        AWNonGoEntry e;
        e.x = x;
        const auto metric = aw_metric(aw, x[0], x[1], x[2], x[3]);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> dist(-3, 3);
        // A nonzero obstruction forces infeasibility; the converse fails, so
        // keep looking until the certificate also has a nonzero obstruction.
        for (std::size_t s = 0; s < max_samples && !e.obstruction_nonzero; ++s) {
            Vector<Rational> alpha(7);
            for (auto& a : alpha)
                a = dist(rng);
            ++e.samples_checked;
            const auto r = go_normal_transitive(aw.space, metric, aw.tangent(alpha), tol, kc);
            const auto o = aw_obstruction(aw, x[0], x[1], x[2], alpha);
            const bool nonzero = sgn(o[0]) != 0 || sgn(o[1]) != 0 || sgn(o[2]) != 0;
            if (nonzero && r.verdict != Verdict::infeasible)
                e.contradiction = true;
            if (r.verdict == Verdict::infeasible && (e.overall != Overall::non_go_certified || nonzero)) {
                e.overall = Overall::non_go_certified;
                e.certificate_alpha = alpha;
                e.obstruction_nonzero = nonzero;
            }
        }
        ok = ok && e.overall == Overall::non_go_certified && e.obstruction_nonzero && !e.contradiction;
        rep.non_go.push_back(e);
    }

    auto pts = unisolvent_points(7, 2);
    const Vector<Rational> rnd = random_rational_point(7, seed);
    pts.push_back(rnd);
    for (long xv : {1L, 2L})
        for (long x4v : {1L, 3L}) {
            AWGoEntry e;
            e.x = xv;
            e.x4 = x4v;
            const Rational x(xv), x4(x4v);
            const auto metric = aw_metric(aw, x, x, x, x4);
            bool identity = true;
            for (const auto& a : pts) {
                const Vector<Rational> xvec = aw.tangent(a);
                const Vector<Rational> vw = aw_closed_form_witness(aw, x, x4, a);
                const Vector<Rational> u = aw.algebra->bracket(metric.apply(xvec), Vector<Rational>(xvec + vw));
                identity = identity && all_zero_exact(u);
                ++e.points_checked;
            }
            e.witness_identity = identity;
            const auto r = go_normal_transitive(aw.space, metric, aw.tangent(rnd), tol, kc);
            if (r.verdict == Verdict::feasible && r.witness) {
                std::vector<Vector<Rational>> unk = aw.space.h.basis();
                unk.insert(unk.end(), kc->basis().begin(), kc->basis().end());
                Vector<Rational> vw(8, Rational(0));
                for (std::size_t c = 0; c < unk.size(); ++c)
                    axpy((*r.witness)[c], unk[c], vw);
                e.solver_matches = vw == aw_closed_form_witness(aw, x, x4, rnd);
            }
            ok = ok && e.witness_identity && e.solver_matches;
            rep.go.push_back(e);
        }

    rep.obstruction_identities = true;
    for (const auto& x : grid)
        rep.obstruction_identities = rep.obstruction_identities && aw_obstruction_identities(aw, x[0], x[1], x[2], seed);
    rep.obstruction_identities =
        rep.obstruction_identities && aw_obstruction_identities(aw, Rational(2), Rational(2), Rational(2), seed);
    ok = ok && rep.obstruction_identities;
    rep.consistent = ok;
    rep.conclusion = ok ? "GO exactly when x1 = x2 = x3 (all checks consistent)"
                        : "checks inconsistent with: GO exactly when x1 = x2 = x3";
    return rep;
}

// ---------------------------------------------------------------------------
// G2 and its five-block decomposition

/// g2 split as p1 = [v_{a+2b}, v_{a+2b}], p2 = [v_a, v_a] + v_a,
/// p3 = v_{a+b} + v_b, p4 = v_{a+2b}, p5 = v_{2a+3b} + v_{a+3b}.
template <class T>
struct G2Decomposition {
    AlgebraPtr<T> algebra;
    ModuleDecomposition<T> blocks;

    const Subspace<T>& p(std::size_t i) const { return blocks.blocks.at(i - 1); }
};

namespace detail {

template <class T>
G2Decomposition<T> assemble_g2(const AlgebraPtr<T>& g)
{
    auto plane = [&](const char* l) { return root_plane_space(g, l); };
    auto line = [&](const char* l) { return coroot_line(g, l); };
    std::vector<Subspace<T>> blocks = {line("a+2b"), sum(line("a"), plane("a")), sum(plane("a+b"), plane("b")),
                                       plane("a+2b"), sum(plane("2a+3b"), plane("a+3b"))};
    return G2Decomposition<T>{g, make_decomposition(Subspace<T>::whole(g), blocks, {"p1", "p2", "p3", "p4", "p5"})};
}

/// Killing form of a subalgebra computed from its own structure constants.
template <class T>
Matrix<T> intrinsic_killing(const Subspace<T>& s)
{
    const auto& alg = *s.algebra();
    const std::size_t d = s.dim();
    std::vector<Matrix<T>> ads;
    for (const auto& x : s.basis()) {
        Matrix<T> a(d, d);
        for (std::size_t j = 0; j < d; ++j) {
            const Vector<T> c = s.coordinates(alg.bracket(x, s.basis()[j]));
            for (std::size_t i = 0; i < d; ++i)
                a(i, j) = c[i];
        }
        ads.push_back(a);
    }
    Matrix<T> b(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            T t(0);
            const Matrix<T> prod = ads[i] * ads[j];
            for (std::size_t k = 0; k < d; ++k)
                t += prod(k, k);
            b(i, j) = t;
        }
    return b;
}

} // namespace detail

/// Block relations of the decomposition; each entry is (description, holds).
template <class T>
std::vector<std::pair<std::string, bool>> g2_block_relations(const G2Decomposition<T>& d)
{
    const auto& p = [&](std::size_t i) -> const Subspace<T>& { return d.p(i); };
    std::vector<std::pair<std::string, bool>> out;
    const auto p35 = module_product(p(3), p(5));
    const auto p45 = module_product(p(4), p(5));
    const auto p34 = module_product(p(3), p(4));
    out.push_back({"[p3,p5] in p4", p(4).contains(p35)});
    out.push_back({"[p3,p5] != 0", p35.dim() > 0});
    out.push_back({"[p4,p5] in p3", p(3).contains(p45)});
    out.push_back({"[p4,p5] != 0", p45.dim() > 0});
    out.push_back({"[p3,p4] in p3+p5", sum(p(3), p(5)).contains(p34)});
    out.push_back({"[p3,p4] not in p3", !p(3).contains(p34)});
    return out;
}

/// Structural checks of the decomposition, each (description, holds).
template <class T>
std::vector<std::pair<std::string, bool>> g2_invariants(const G2Decomposition<T>& d)
{
    std::vector<std::pair<std::string, bool>> out;
    const std::size_t dims[5] = {1, 3, 4, 2, 4};
    bool dim_ok = true;
    for (std::size_t i = 1; i <= 5; ++i)
        dim_ok = dim_ok && d.p(i).dim() == dims[i - 1];
    out.push_back({"dims (1,3,4,2,4)", dim_ok});
    const auto t = cartan_subspace(d.algebra);
    out.push_back({"t = p1 + (p2 cap t)", t == sum(d.p(1), intersection(d.p(2), t))});
    const auto s124 = sum(std::vector<Subspace<T>>{d.p(1), d.p(2), d.p(4)});
    const auto s125 = sum(std::vector<Subspace<T>>{d.p(1), d.p(2), d.p(5)});
    out.push_back({"p1+p2+p4 subalgebra of dim 6", is_subalgebra(s124) && s124.dim() == 6});
    out.push_back({"p1+p2+p4 = (p1+p4) + p2 commuting su(2) ideals",
                   is_subalgebra(sum(d.p(1), d.p(4))) && is_subalgebra(d.p(2)) &&
                       module_product(sum(d.p(1), d.p(4)), d.p(2)).dim() == 0 &&
                       module_product(d.p(2), d.p(2)) == d.p(2)});
    const bool su3 = is_subalgebra(s125) && s125.dim() == 8 && s125.contains(t) &&
                     is_positive_definite(Matrix<T>(from_int<T>(-1) * detail::intrinsic_killing(s125)));
    out.push_back({"p1+p2+p5 subalgebra of dim 8, rank 2, negative definite Killing form", su3});
    out.push_back({"[p2,p4] = 0", module_product(d.p(2), d.p(4)).dim() == 0});
    for (auto& r : g2_block_relations(d))
        out.push_back(r);
    return out;
}

/// Exact decomposition, built and verified once.
inline const G2Decomposition<Surd3>& g2_decomposition_exact()
{
    static const G2Decomposition<Surd3> d = [] {
        auto dec = detail::assemble_g2(build_g2_exact());
        for (const auto& [what, ok] : g2_invariants(dec))
            if (!ok)
                throw ConstructionError("g2_decomposition: " + what + " fails");
        return dec;
    }();
    return d;
}

/// The decomposition over Q(sqrt 3) or double. Invariants are always checked
/// in exact arithmetic first.
template <class T>
G2Decomposition<T> g2_decomposition()
{
    const auto& exact = g2_decomposition_exact();
    if constexpr (std::is_same_v<T, Surd3>)
        return exact;
    else
        return detail::assemble_g2(convert_algebra<T>(*exact.algebra));
}

/// u1 <.,.>|p1 + ... + u5 <.,.>|p5 with <.,.> = -B.
template <class T>
MetricEndomorphism<T> g2_metric(const G2Decomposition<T>& d, const Vector<T>& u)
{
    if (u.size() != 5)
        throw std::invalid_argument("g2_metric: need 5 coefficients");
    return make_metric(d.blocks, u);
}

/// The three Einstein parameter sets (the third to the 8 published digits).
inline std::vector<std::array<std::string, 5>> g2_einstein_sets()
{
    return {{"1", "1", "1", "1", "1"},
            {"1", "1", "11/9", "11/9", "1"},
            {"1.0851961", "0.69929486", "0.93245951", "1.0225069", "1"}};
}

template <class T>
Vector<T> parse_coefficients(const std::array<std::string, 5>& s)
{
    Vector<T> u;
    for (const auto& x : s) {
        const Rational q = parse_rational(x);
        if constexpr (is_exact_v<T>)
            u.push_back(from_rational<T>(q));
        else
            u.push_back(static_cast<T>(q.get_d()));
    }
    return u;
}

struct G2SetReport {
    std::array<std::string, 5> u;
    EinsteinReport einstein;
    double einstein_tolerance = 0;
    std::optional<std::string> natural_label;
    std::optional<double> natural_x;
    std::vector<std::pair<std::string, double>> natural_u;
    bool kmax_adapted = false;
    bool kmax_is_p1_p2 = false;
    GOCertificate<double> certificate;
    double worst_perturbed_deviation = 0;
    std::size_t perturbed_non_go = 0;
    std::size_t perturbations = 0;
};

struct G2Report {
    std::uint64_t seed = 0;
    std::vector<G2SetReport> sets;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Samples used by the G2 reproduction: per block, cross block and generic.
inline std::vector<Vector<double>> g2_samples(const G2Decomposition<double>& d, std::uint64_t seed)
{
    return standard_samples(d.blocks, seed, 8);
}

inline std::vector<Candidate<double>> g2_candidates(const MetricEndomorphism<double>& m, const RootSystem& rs)
{
    auto c = natural_reductive_candidates(m, &rs);
    std::stable_sort(c.begin(), c.end(),
                     [](const Candidate<double>& a, const Candidate<double>& b) { return a.space.dim() > b.space.dim(); });
    return c;
}

/// Einstein, naturally reductive and GO checks for the three parameter sets.
inline G2Report reproduce_main_theorem(std::uint64_t seed = 1, const Tolerances& tol = {}, double tol_einstein = 1e-5)
{
    const auto d = g2_decomposition<double>();
    const RootSystem rs = build_g2();
    const auto samples = g2_samples(d, seed);
    G2Report rep;
    rep.seed = seed;
    const auto sets = g2_einstein_sets();
    for (std::size_t si = 0; si < sets.size(); ++si) {
        G2SetReport sr;
        sr.u = sets[si];
        const Vector<double> u = parse_coefficients<double>(sets[si]);
        const auto metric = g2_metric(d, u);
        sr.einstein_tolerance = si < 2 ? 1e-12 : tol_einstein;
        sr.einstein = einstein_check(metric, sr.einstein_tolerance);
        if (auto f = detect_naturally_reductive(metric, g2_candidates(metric, rs))) {
            sr.natural_label = f->label;
            if (f->x)
                sr.natural_x = *f->x;
            sr.natural_u = f->u;
        }
        const auto kmax = max_right_isometry_algebra(metric);
        sr.kmax_adapted = is_adapted(kmax, metric);
        sr.kmax_is_p1_p2 = kmax == sum(d.p(1), d.p(2));
        sr.certificate = lie_group_go_check(metric, samples, seed, tol);
        if (si == 2) {
            // corners of the +-1e-6 box around u1..u4
            for (unsigned corner = 0; corner < 16; ++corner) {
                Vector<double> up = u;
                for (std::size_t i = 0; i < 4; ++i)
                    up[i] += (corner >> i & 1U) ? 1e-6 : -1e-6;
                const auto pm = g2_metric(d, up);
                sr.worst_perturbed_deviation =
                    std::max(sr.worst_perturbed_deviation, ricci_left_invariant(pm).deviation);
                const auto cert = lie_group_go_check(pm, samples, seed, tol);
                if (cert.overall == Overall::non_go_certified)
                    ++sr.perturbed_non_go;
                ++sr.perturbations;
            }
        }
        rep.sets.push_back(sr);
    }

    auto expect = [&](bool cond, const std::string& what) {
        if (!cond)
            rep.mismatches.push_back(what);
    };
    const auto& s1 = rep.sets[0];
    const auto& s2 = rep.sets[1];
    const auto& s3 = rep.sets[2];
    expect(s1.einstein.is_einstein, "set 1: Einstein");
    expect(s1.certificate.overall == Overall::go_confirmed_on_samples, "set 1: GO on samples");
    expect(s1.natural_label.has_value(), "set 1: naturally reductive");
    expect(s2.einstein.is_einstein, "set 2: Einstein");
    expect(s2.natural_label && *s2.natural_label == "p1+p2+p5", "set 2: naturally reductive with h = p1+p2+p5");
    expect(s2.natural_x && std::abs(*s2.natural_x - 11.0 / 9.0) < 1e-12, "set 2: x = 11/9");
    bool u_one = !s2.natural_u.empty();
    for (const auto& [name, v] : s2.natural_u)
        u_one = u_one && std::abs(v - 1.0) < 1e-12;
    expect(u_one, "set 2: u = 1 on h");
    expect(s2.certificate.overall == Overall::go_confirmed_on_samples, "set 2: GO on samples");
    expect(s3.einstein.is_einstein, "set 3: Einstein within tolerance");
    expect(!s3.natural_label.has_value(), "set 3: no naturally reductive candidate");
    expect(s3.certificate.kmax_dim == std::size_t{4} && s3.kmax_is_p1_p2, "set 3: k_max = p1+p2");
    expect(s3.certificate.overall == Overall::non_go_certified, "set 3: non-GO certified");
    expect(s3.worst_perturbed_deviation <= 1e-4, "set 3: Einstein under perturbation");
    expect(s3.perturbed_non_go == s3.perturbations, "set 3: non-GO under perturbation");
    return rep;
}

} // namespace gometrics

#endif // GOMETRICS_SPACES_HPP
