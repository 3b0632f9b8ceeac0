#ifndef GOMETRICS_ROOTSYS_HPP
#define GOMETRICS_ROOTSYS_HPP

#include "gometrics/linalg.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace gometrics {

/// A vector of the Cartan space in simple-root coordinates.
using Weight = std::vector<Rational>;

/// Reduced root system of small rank. Roots are stored in simple-root
/// coordinates, so every root is an integer vector; `gram` is an abstract
/// rational Gram matrix on the simple roots and `minus_b_scale` converts it
/// to the restriction of -B on the Cartan subalgebra of the compact algebra
/// built from this system.
struct RootSystem {
    std::string name;
    std::size_t rank = 0;
    std::vector<std::string> simple_names;
    std::vector<Weight> roots;    // positive roots first, then their negatives in the same order
    std::vector<Weight> positive; // ordering fixed by the builder
    std::vector<Weight> simple;
    Matrix<Rational> gram;
    Rational minus_b_scale;
    std::string frame = "simple-root coordinates";

    Rational inner(const Weight& a, const Weight& b) const { return bilinear(gram, a, b); }
    Rational norm2(const Weight& a) const { return inner(a, a); }

    /// The Gram matrix of -B on the Cartan subalgebra.
    Matrix<Rational> minus_b_gram() const { return minus_b_scale * gram; }

    bool is_root(const Weight& w) const { return index_of(w) < roots.size(); }

    /// Index into `roots`, or roots.size() if absent.
    std::size_t index_of(const Weight& w) const
    {
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (roots[i] == w)
                return i;
        return roots.size();
    }

    /// Index into `positive`, or positive.size() if absent.
    std::size_t positive_index(const Weight& w) const
    {
        for (std::size_t i = 0; i < positive.size(); ++i)
            if (positive[i] == w)
                return i;
        return positive.size();
    }

    bool is_positive(const Weight& w) const { return positive_index(w) < positive.size(); }

    /// Human-readable label such as "a+2b" or "-(2a+3b)".
    std::string label(const Weight& w) const;
};

inline Weight operator-(const Weight& a)
{
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

inline std::string RootSystem::label(const Weight& w) const
{
    if (w.size() != rank)
        throw std::invalid_argument("label: wrong dimension");
    bool nonpositive = true;
    for (const auto& c : w)
        if (sgn(c) > 0)
            nonpositive = false;
    const bool negate = nonpositive && !all_zero_exact(w);
    const Weight v = negate ? -w : w;
    std::string body;
    std::size_t terms = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        if (sgn(v[i]) == 0)
            continue;
        if (!body.empty())
            body += sgn(v[i]) > 0 ? "+" : "";
        if (v[i] == -1)
            body += "-";
        else if (v[i] != 1)
            body += v[i].get_str();
        body += simple_names[i];
        ++terms;
    }
    if (body.empty())
        return "0";
    if (!negate)
        return body;
    return terms > 1 ? "-(" + body + ")" : "-" + body;
}

namespace detail {

inline RootSystem finish_root_system(RootSystem rs)
{
    rs.rank = rs.simple.size();
    rs.roots = rs.positive;
    for (const auto& r : rs.positive)
        rs.roots.push_back(-r);
    // -B restricted to t is (sum_r r r^T)^{-1} in simple-root coordinates.
    Matrix<Rational> s(rs.rank, rs.rank);
    for (const auto& r : rs.roots)
        for (std::size_t i = 0; i < rs.rank; ++i)
            for (std::size_t j = 0; j < rs.rank; ++j)
                s(i, j) += r[i] * r[j];
    const Matrix<Rational> gb = inverse(s);
    rs.minus_b_scale = gb(0, 0) / rs.gram(0, 0);
    if (!(gb == rs.minus_b_scale * rs.gram))
        throw std::logic_error("root system gram is not proportional to -B");
    return rs;
}

} // namespace detail

/// G2 with a long simple root a and a short simple root b, |a|^2 = 3|b|^2 and
/// angle 5pi/6. Positive system {a, b, a+b, a+2b, a+3b, 2a+3b}.
inline RootSystem build_g2()
{
    RootSystem rs;
    rs.name = "g2";
    rs.simple_names = {"a", "b"};
    auto w = [](long x, long y) { return Weight{Rational(x), Rational(y)}; };
    rs.simple = {w(1, 0), w(0, 1)};
    rs.positive = {w(1, 0), w(0, 1), w(1, 1), w(1, 2), w(1, 3), w(2, 3)};
    rs.gram = Matrix<Rational>(2, 2);
    rs.gram(0, 0) = 6;
    rs.gram(0, 1) = rs.gram(1, 0) = -3;
    rs.gram(1, 1) = 2;
    return detail::finish_root_system(std::move(rs));
}

/// A2 (the root system of su(3)), simple roots a, b at angle 2pi/3.
inline RootSystem build_a2()
{
    RootSystem rs;
    rs.name = "a2";
    rs.simple_names = {"a", "b"};
    auto w = [](long x, long y) { return Weight{Rational(x), Rational(y)}; };
    rs.simple = {w(1, 0), w(0, 1)};
    rs.positive = {w(1, 0), w(0, 1), w(1, 1)};
    rs.gram = Matrix<Rational>(2, 2);
    rs.gram(0, 0) = 2;
    rs.gram(0, 1) = rs.gram(1, 0) = -1;
    rs.gram(1, 1) = 2;
    return detail::finish_root_system(std::move(rs));
}

inline RootSystem build_root_system(const std::string& name)
{
    if (name == "g2")
        return build_g2();
    if (name == "a2")
        return build_a2();
    throw std::invalid_argument("unsupported root system '" + name + "'");
}

/// Orthogonal reflection in the hyperplane of `alpha`.
inline Weight reflect(const RootSystem& rs, const Weight& alpha, const Weight& h)
{
    if (!rs.is_root(alpha))
        throw std::domain_error("reflect: " + rs.label(alpha) + " is not a root");
    const Rational c = 2 * rs.inner(h, alpha) / rs.norm2(alpha);
    Weight out = h;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= c * alpha[i];
    return out;
}

/// Matrix (acting on simple-root coordinates) of the reflection in `alpha`.
inline Matrix<Rational> reflection_matrix(const RootSystem& rs, const Weight& alpha)
{
    Matrix<Rational> m(rs.rank, rs.rank);
    for (std::size_t j = 0; j < rs.rank; ++j) {
        const Weight img = reflect(rs, alpha, unit_vector<Rational>(rs.rank, j));
        for (std::size_t i = 0; i < rs.rank; ++i)
            m(i, j) = img[i];
    }
    return m;
}

/// All elements of the Weyl group, generated by the simple reflections.
/// The identity comes first; the rest follow in breadth-first order.
inline std::vector<Matrix<Rational>> weyl_group(const RootSystem& rs)
{
    std::vector<Matrix<Rational>> gens;
    for (const auto& s : rs.simple)
        gens.push_back(reflection_matrix(rs, s));
    std::vector<Matrix<Rational>> elems{Matrix<Rational>::identity(rs.rank)};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            Matrix<Rational> next = g * elems[i];
            if (std::find(elems.begin(), elems.end(), next) == elems.end())
                elems.push_back(std::move(next));
        }
        if (elems.size() > 10000)
            throw std::logic_error("weyl_group: group too large");
    }
    return elems;
}

inline std::vector<Weight> sorted_weights(std::vector<Weight> ws)
{
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

/// The W-orbit of a finite set of Cartan vectors, as the list of distinct
/// images w(seed), each sorted; the list itself is sorted.
inline std::vector<std::vector<Weight>> weyl_orbit(const RootSystem& rs, const std::vector<Weight>& seed)
{
    std::set<std::vector<Weight>> images;
    for (const auto& w : weyl_group(rs)) {
        std::vector<Weight> img;
        for (const auto& h : seed)
            img.push_back(w * h);
        images.insert(sorted_weights(std::move(img)));
    }
    return {images.begin(), images.end()};
}

/// Distinct points of the W-orbit of a single vector.
inline std::vector<Weight> weyl_orbit_points(const RootSystem& rs, const Weight& h)
{
    std::vector<Weight> pts;
    for (const auto& img : weyl_orbit(rs, {h}))
        pts.push_back(img.front());
    return sorted_weights(std::move(pts));
}

inline bool in_chamber(const RootSystem& rs, const Weight& h)
{
    for (const auto& s : rs.simple)
        if (sgn(rs.inner(h, s)) < 0)
            return false;
    return true;
}

/// Moves h into the closed Weyl chamber of the positive system by simple reflections.
inline Weight chamber_reduce(const RootSystem& rs, Weight h)
{
    for (std::size_t guard = 0; guard < 1000; ++guard) {
        bool moved = false;
        for (const auto& s : rs.simple) {
            if (sgn(rs.inner(h, s)) < 0) {
                h = reflect(rs, s, h);
                moved = true;
                break;
            }
        }
        if (!moved)
            return h;
    }
    throw std::logic_error("chamber_reduce did not terminate");
}

/// A subset of the roots of a parent system. The parent must outlive it.
struct RootSubsystem {
    const RootSystem* parent = nullptr;
    std::vector<Weight> members; // sorted

    std::size_t size() const { return members.size(); }

    std::vector<Weight> positive_members() const
    {
        std::vector<Weight> out;
        for (const auto& p : parent->positive)
            if (std::find(members.begin(), members.end(), p) != members.end())
                out.push_back(p);
        return out;
    }

    std::vector<std::string> labels() const
    {
        std::vector<std::string> out;
        for (const auto& p : positive_members())
            out.push_back("+-" + (p.size() ? parent->label(p) : std::string()));
        return out;
    }
};

inline bool is_symmetric_subset(const RootSystem& rs, const std::vector<Weight>& a)
{
    (void)rs;
    for (const auto& x : a)
        if (std::find(a.begin(), a.end(), -x) == a.end())
            return false;
    return true;
}

inline bool is_closed_subset(const RootSystem& rs, const std::vector<Weight>& a)
{
    for (const auto& x : a)
        for (const auto& y : a)
            for (int sign : {1, -1}) {
                Weight s = x;
                for (std::size_t i = 0; i < s.size(); ++i)
                    s[i] += sign * y[i];
                if (rs.is_root(s) && std::find(a.begin(), a.end(), s) == a.end())
                    return false;
            }
    return true;
}

/// Smallest closed symmetric subset of the roots containing `gens`.
inline std::vector<Weight> closed_symmetric_closure(const RootSystem& rs, const std::vector<Weight>& gens)
{
    std::set<Weight> cur;
    for (const auto& g : gens) {
        cur.insert(g);
        cur.insert(-g);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> snapshot(cur.begin(), cur.end());
        for (const auto& x : snapshot)
            for (const auto& y : snapshot)
                for (int sign : {1, -1}) {
                    Weight s = x;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        s[i] += sign * y[i];
                    if (rs.is_root(s) && cur.insert(s).second)
                        grew = true;
                }
    }
    return {cur.begin(), cur.end()};
}

/// Minimum over W of the sorted image of a root subset.
inline std::vector<Weight> canonical_form(const RootSystem& rs, const std::vector<Weight>& a,
                                          const std::vector<Matrix<Rational>>& group)
{
    std::vector<Weight> best;
    bool first = true;
    for (const auto& w : group) {
        std::vector<Weight> img;
        for (const auto& x : a)
            img.push_back(w * x);
        img = sorted_weights(std::move(img));
        if (first || img < best) {
            best = std::move(img);
            first = false;
        }
    }
    (void)rs;
    return best;
}

/// One representative per W-class of proper closed symmetric subsystems,
/// ordered by size and then by the positive-root index list of the
/// representative. Representatives are taken, where possible, as closures of
/// subsets of the simple roots extended by the highest root; otherwise the
/// first subset in enumeration order is used.
inline std::vector<RootSubsystem> enumerate_closed_symmetric_subsystems(const RootSystem& rs)
{
    const auto group = weyl_group(rs);
    const std::size_t np = rs.positive.size();
    if (np > 20)
        throw std::invalid_argument("enumerate_closed_symmetric_subsystems: system too large");

    auto members_of_mask = [&](unsigned long mask) {
        std::vector<Weight> a;
        for (std::size_t i = 0; i < np; ++i)
            if (mask >> i & 1UL) {
                a.push_back(rs.positive[i]);
                a.push_back(-rs.positive[i]);
            }
        return sorted_weights(std::move(a));
    };
    auto index_list = [&](const std::vector<Weight>& a) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < np; ++i)
            if (std::find(a.begin(), a.end(), rs.positive[i]) != a.end())
                idx.push_back(i);
        return idx;
    };

    // classes keyed by canonical form; value = first member in enumeration order
    std::map<std::vector<Weight>, std::vector<Weight>> classes;
    for (unsigned long mask = 0; mask < (1UL << np); ++mask) {
        if (mask == (1UL << np) - 1)
            continue; // the whole system is excluded
        auto a = members_of_mask(mask);
        if (!is_closed_subset(rs, a))
            continue;
        auto key = canonical_form(rs, a, group);
        auto it = classes.find(key);
        if (it == classes.end() || index_list(a) < index_list(it->second))
            classes[key] = a;
    }

    // preferred representatives from the extended simple system
    std::vector<Weight> extended = rs.simple;
    extended.push_back(rs.positive.back()); // builders list the highest root last
    std::map<std::vector<Weight>, std::vector<Weight>> preferred;
    for (unsigned long mask = 0; mask < (1UL << extended.size()); ++mask) {
        std::vector<Weight> gens;
        for (std::size_t i = 0; i < extended.size(); ++i)
            if (mask >> i & 1UL)
                gens.push_back(extended[i]);
        auto a = closed_symmetric_closure(rs, gens);
        if (a.size() == rs.roots.size())
            continue;
        auto key = canonical_form(rs, a, group);
        if (!preferred.count(key))
            preferred[key] = a;
    }

    std::vector<RootSubsystem> out;
    for (const auto& [key, first] : classes) {
        auto it = preferred.find(key);
        out.push_back({&rs, it != preferred.end() ? it->second : first});
    }
    std::sort(out.begin(), out.end(), [&](const RootSubsystem& x, const RootSubsystem& y) {
        if (x.size() != y.size())
            return x.size() < y.size();
        return index_list(x.members) < index_list(y.members);
    });
    return out;
}

/// All closed symmetric subsets (not up to W), including the empty set and
/// the whole system, in bitmask order over the positive roots.
inline std::vector<RootSubsystem> all_closed_symmetric_subsets(const RootSystem& rs)
{
    std::vector<RootSubsystem> out;
    const std::size_t np = rs.positive.size();
    for (unsigned long mask = 0; mask < (1UL << np); ++mask) {
        std::vector<Weight> a;
        for (std::size_t i = 0; i < np; ++i)
            if (mask >> i & 1UL) {
                a.push_back(rs.positive[i]);
                a.push_back(-rs.positive[i]);
            }
        a = sorted_weights(std::move(a));
        if (is_closed_subset(rs, a))
            out.push_back({&rs, a});
    }
    return out;
}

} // namespace gometrics

#endif // GOMETRICS_ROOTSYS_HPP
