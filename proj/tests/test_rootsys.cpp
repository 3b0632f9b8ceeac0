#include "gometrics/rootsys.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>

using namespace gometrics;

namespace {

// Independent planar model of G2 in doubles: b = (1, 0), a = (-3/2, sqrt3/2).
struct Planar {
    std::vector<std::array<double, 2>> roots;
    std::vector<Weight> weights; // the same roots in simple-root coordinates

    explicit Planar(const RootSystem& rs)
    {
        const double s3 = std::sqrt(3.0);
        const std::array<double, 2> a{-1.5, s3 / 2}, b{1.0, 0.0};
        for (const auto& w : rs.roots) {
            const double x = w[0].get_d(), y = w[1].get_d();
            roots.push_back({x * a[0] + y * b[0], x * a[1] + y * b[1]});
            weights.push_back(w);
        }
    }

    std::size_t find(const std::array<double, 2>& v) const
    {
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (std::abs(roots[i][0] - v[0]) < 1e-9 && std::abs(roots[i][1] - v[1]) < 1e-9)
                return i;
        return roots.size();
    }

    static std::array<double, 2> reflect(const std::array<double, 2>& a, const std::array<double, 2>& v)
    {
        const double c = 2 * (a[0] * v[0] + a[1] * v[1]) / (a[0] * a[0] + a[1] * a[1]);
        return {v[0] - c * a[0], v[1] - c * a[1]};
    }

    // Weyl group as permutations of the root list, closed under composition.
    std::vector<std::vector<std::size_t>> group() const
    {
        const std::size_t n = roots.size();
        std::vector<std::vector<std::size_t>> gens;
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<std::size_t> p(n);
            for (std::size_t i = 0; i < n; ++i)
                p[i] = find(reflect(roots[r], roots[i]));
            gens.push_back(p);
        }
        std::vector<std::size_t> id(n);
        for (std::size_t i = 0; i < n; ++i)
            id[i] = i;
        std::set<std::vector<std::size_t>> seen{id};
        std::vector<std::vector<std::size_t>> queue{id};
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (const auto& g : gens) {
                std::vector<std::size_t> c(n);
                for (std::size_t i = 0; i < n; ++i)
                    c[i] = g[queue[q][i]];
                if (seen.insert(c).second)
                    queue.push_back(c);
            }
        return queue;
    }
};

bool closed_symmetric(const Planar& p, unsigned mask)
{
    const std::size_t n = p.roots.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1U))
            continue;
        const std::size_t neg = p.find({-p.roots[i][0], -p.roots[i][1]});
        if (!(mask >> neg & 1U))
            return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1U))
                continue;
            const std::size_t s = p.find({p.roots[i][0] + p.roots[j][0], p.roots[i][1] + p.roots[j][1]});
            if (s < n && !(mask >> s & 1U))
                return false;
        }
    }
    return true;
}

unsigned orbit_min(const std::vector<std::vector<std::size_t>>& group, unsigned mask, std::size_t n)
{
    unsigned best = mask;
    for (const auto& g : group) {
        unsigned img = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U)
                img |= 1U << g[i];
        best = std::min(best, img);
    }
    return best;
}

unsigned mask_of(const Planar& p, const std::vector<Weight>& members)
{
    unsigned m = 0;
    for (const auto& w : members)
        for (std::size_t i = 0; i < p.weights.size(); ++i)
            if (p.weights[i] == w)
                m |= 1U << i;
    return m;
}

} // namespace

TEST(RootSystem, G2Basics)
{
    const auto rs = build_g2();
    EXPECT_EQ(rs.rank, 2u);
    EXPECT_EQ(rs.roots.size(), 12u);
    EXPECT_EQ(rs.positive.back(), (Weight{Rational(2), Rational(3)})); // highest root
    EXPECT_EQ(rs.norm2(rs.simple[0]), 3 * rs.norm2(rs.simple[1]));
    // long roots have -B length 1/h with dual Coxeter number h = 4
    EXPECT_EQ(rs.minus_b_scale * rs.norm2(rs.simple[0]), Rational(1) / 4);
    EXPECT_EQ(rs.minus_b_scale, Rational(1) / 24);
    EXPECT_EQ(rs.label(Weight{Rational(1), Rational(2)}), "a+2b");
    EXPECT_EQ(rs.label(Weight{Rational(-2), Rational(-3)}), "-(2a+3b)");
}

TEST(RootSystem, A2Basics)
{
    const auto rs = build_a2();
    EXPECT_EQ(rs.roots.size(), 6u);
    // dual Coxeter number 3
    EXPECT_EQ(rs.minus_b_scale * rs.norm2(rs.simple[0]), Rational(1) / 3);
    EXPECT_THROW(build_root_system("e8"), std::invalid_argument);
}

TEST(RootSystem, ReflectionProperties)
{
    const auto rs = build_g2();
    const Weight h{Rational(3), Rational(-1) / 7};
    for (const auto& a : rs.roots) {
        EXPECT_EQ(reflect(rs, a, a), -a);
        EXPECT_EQ(reflect(rs, a, reflect(rs, a, h)), h);
        EXPECT_EQ(rs.norm2(reflect(rs, a, h)), rs.norm2(h));
        for (const auto& b : rs.roots)
            EXPECT_TRUE(rs.is_root(reflect(rs, a, b)));
    }
    EXPECT_THROW(reflect(rs, Weight{Rational(1), Rational(5)}, h), std::domain_error);
}

TEST(RootSystem, WeylGroupOrders)
{
    EXPECT_EQ(weyl_group(build_g2()).size(), 12u);
    EXPECT_EQ(weyl_group(build_a2()).size(), 6u);
    const Planar p(build_g2());
    EXPECT_EQ(p.group().size(), 12u);
}

TEST(RootSystem, WeylOrbitSplitsLongAndShort)
{
    const auto rs = build_g2();
    EXPECT_EQ(weyl_orbit_points(rs, rs.simple[0]).size(), 6u);
    EXPECT_EQ(weyl_orbit_points(rs, rs.simple[1]).size(), 6u);
    for (const auto& p : weyl_orbit_points(rs, rs.simple[0]))
        EXPECT_EQ(rs.norm2(p), 6);
    // a pair {a, b} has one image per group element (no stabilizer)
    EXPECT_EQ(weyl_orbit(rs, {rs.simple[0], rs.simple[1]}).size(), 12u);
}

TEST(RootSystem, ChamberReduce)
{
    const auto rs = build_g2();
    const Weight h{Rational(-5), Rational(2)};
    const Weight c = chamber_reduce(rs, h);
    EXPECT_TRUE(in_chamber(rs, c));
    const auto orbit = weyl_orbit_points(rs, h);
    EXPECT_NE(std::find(orbit.begin(), orbit.end(), c), orbit.end());
    std::size_t in = 0;
    for (const auto& p : orbit)
        in += in_chamber(rs, p);
    EXPECT_EQ(in, 1u);
}

TEST(RootSystem, G2SubsystemsMatchBruteForce)
{
    const auto rs = build_g2();
    const Planar p(rs);
    const auto group = p.group();
    const std::size_t n = p.roots.size();
    std::set<unsigned> oracle;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (mask == (1U << n) - 1 || !closed_symmetric(p, mask))
            continue;
        oracle.insert(orbit_min(group, mask, n));
    }
    const auto reps = enumerate_closed_symmetric_subsystems(rs);
    ASSERT_EQ(reps.size(), oracle.size());
    std::set<unsigned> found;
    for (const auto& r : reps) {
        const unsigned m = mask_of(p, r.members);
        EXPECT_TRUE(closed_symmetric(p, m));
        found.insert(orbit_min(group, m, n));
    }
    EXPECT_EQ(found, oracle);
}

TEST(RootSystem, G2SubsystemRepresentatives)
{
    const auto rs = build_g2();
    std::vector<std::vector<std::string>> got;
    for (const auto& s : enumerate_closed_symmetric_subsystems(rs))
        got.push_back(s.labels());
    const std::vector<std::vector<std::string>> expected = {
        {}, {"+-a"}, {"+-b"}, {"+-b", "+-2a+3b"}, {"+-a", "+-a+3b", "+-2a+3b"}};
    EXPECT_EQ(got, expected);
}

TEST(RootSystem, A2Subsystems)
{
    const auto rs = build_a2();
    const auto reps = enumerate_closed_symmetric_subsystems(rs);
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_TRUE(reps[0].members.empty());
    EXPECT_EQ(reps[1].labels(), std::vector<std::string>{"+-a"});
}

TEST(RootSystem, ClosureAndPredicates)
{
    const auto rs = build_g2();
    const auto all = closed_symmetric_closure(rs, {rs.simple[0], rs.simple[1]});
    EXPECT_EQ(all.size(), 12u);
    const auto two_short = closed_symmetric_closure(rs, {Weight{Rational(0), Rational(1)}, Weight{Rational(1), Rational(1)}});
    // two short roots at 60 degrees generate all short roots and then the long ones
    EXPECT_EQ(two_short.size(), 12u);
    std::vector<Weight> bad = {rs.simple[0], -rs.simple[0], rs.simple[1], -rs.simple[1]};
    EXPECT_TRUE(is_symmetric_subset(rs, bad));
    EXPECT_FALSE(is_closed_subset(rs, bad));
}
