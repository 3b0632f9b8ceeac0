#include "gometrics/spaces.hpp"

#include <gtest/gtest.h>

using namespace gometrics;

namespace {

Vector<Rational> alpha7(std::initializer_list<long> v)
{
    Vector<Rational> a;
    for (long x : v)
        a.push_back(Rational(x));
    return a;
}

} // namespace

TEST(AloffWallach, ConstantsAndBracketTable)
{
    const std::vector<std::array<long, 3>> cases = {{2, 1, 14}, {3, 1, 26}, {3, 2, 38}, {5, 2, 78}};
    for (const auto& [k, l, L] : cases) {
        const auto aw = aloff_wallach<Rational>(k, l);
        const long m = -k - l;
        EXPECT_EQ(aw.L, L);
        EXPECT_EQ(aw.algebra->inner(aw.x0, aw.x0), Rational(3 * L) / 2);
        // Z = i diag(k, l, m) = a H1 + b H2
        const Rational a = aw.z[0], b = aw.z[1];
        EXPECT_EQ(a + b, k);
        EXPECT_EQ(b - a, l);
        EXPECT_EQ(-2 * b, m);
        EXPECT_TRUE(all_zero_exact(aw.algebra->bracket(aw.z, aw.x0)));
        const long rot[3] = {k - l, k - m, l - m};
        for (std::size_t p = 0; p < 3; ++p) {
            const auto u = aw.basis_element(2 * p + 1), v = aw.basis_element(2 * p + 2);
            EXPECT_EQ(aw.algebra->bracket(aw.z, u), scaled(Rational(rot[p]), v));
            EXPECT_EQ(aw.algebra->bracket(aw.z, v), scaled(Rational(-rot[p]), u));
        }
        // X0 is orthogonal to Z
        EXPECT_EQ(aw.algebra->inner(aw.z, aw.x0), 0);
        EXPECT_EQ(aw.space.m.dim(), 7u);
    }
}

TEST(AloffWallach, InputValidation)
{
    EXPECT_THROW(aloff_wallach<Rational>(4, 2), std::invalid_argument);
    EXPECT_THROW(aloff_wallach<Rational>(1, 2), std::invalid_argument);
    EXPECT_THROW(aloff_wallach<Rational>(-1, 0), std::invalid_argument);
    EXPECT_THROW(aloff_wallach<Rational>(0, 0), std::invalid_argument);
    for (auto [k, l] : {std::pair{1L, 1L}, std::pair{1L, 0L}}) {
        const auto aw = aloff_wallach<Rational>(k, l);
        EXPECT_TRUE(aw.excluded());
        EXPECT_THROW(require_not_excluded(aw), ExcludedCaseError);
        EXPECT_THROW(aw_go_classify(k, l), ExcludedCaseError);
    }
    EXPECT_FALSE(aloff_wallach<Rational>(2, 1).excluded());
}

TEST(AloffWallach, MetricIsDiagonalOnTheFrame)
{
    const auto aw = aloff_wallach<Rational>(3, 2);
    const Rational x1(2), x2(Rational(5) / 3), x3(7), x4(Rational(1) / 2);
    const auto m = aw_metric(aw, x1, x2, x3, x4);
    const Rational expect[7] = {x4, x1, x1, x2, x2, x3, x3};
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            const auto ei = aw.basis_element(i), ej = aw.basis_element(j);
            const Rational g = m.metric(ei, ej) / aw.algebra->inner(ei, ei);
            EXPECT_EQ(g, i == j ? expect[i] : Rational(0)) << i << ',' << j;
        }
}

TEST(AloffWallach, CubicObstructionBlocksGeodesics)
{
    const auto aw = aloff_wallach<Rational>(2, 1);
    const auto m = aw_metric(aw, Rational(1), Rational(2), Rational(3), Rational(1));
    const auto a = alpha7({0, 1, 0, 1, 0, 1, 0});
    EXPECT_EQ(aw_cubic(a), 1);
    const auto o = aw_obstruction(aw, Rational(1), Rational(2), Rational(3), a);
    EXPECT_EQ(o[0], -1);
    EXPECT_EQ(o[1], 2);
    EXPECT_EQ(o[2], -1);
    const auto r = go_normal_transitive(aw.space, m, aw.tangent(a));
    EXPECT_EQ(r.verdict, Verdict::infeasible);
    // the converse fails: P vanishes here but the vector is still not geodesic
    const auto b = alpha7({0, -2, 1, -1, 0, -1, 2});
    EXPECT_EQ(aw_cubic(b), 0);
    EXPECT_EQ(go_normal_transitive(aw.space, m, aw.tangent(b)).verdict, Verdict::infeasible);
    // a vector inside one block is always geodesic
    for (std::size_t i = 0; i < 7; ++i) {
        Vector<Rational> e(7, Rational(0));
        e[i] = 1;
        EXPECT_EQ(go_normal_transitive(aw.space, m, aw.tangent(e)).verdict, Verdict::feasible) << i;
    }
}

TEST(AloffWallach, ObstructionIdentities)
{
    const auto aw = aloff_wallach<Rational>(3, 1);
    EXPECT_TRUE(aw_obstruction_identities(aw, Rational(1), Rational(2), Rational(3), 5));
    EXPECT_TRUE(aw_obstruction_identities(aw, Rational(4), Rational(4), Rational(4), 5));
    EXPECT_EQ(unisolvent_points(7, 3).size(), 120u); // C(10, 3)
    EXPECT_EQ(unisolvent_points(7, 2).size(), 36u);
    EXPECT_EQ(random_rational_point(7, 9), random_rational_point(7, 9));
}

TEST(AloffWallach, ClosedFormWitness)
{
    const auto aw = aloff_wallach<Rational>(3, 2);
    const Rational x(3), x4(Rational(5) / 2);
    const auto m = aw_metric(aw, x, x, x, x4);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const auto a = random_rational_point(7, seed);
        const auto xv = aw.tangent(a);
        const auto vw = aw_closed_form_witness(aw, x, x4, a);
        EXPECT_TRUE(cartan_subspace(aw.algebra).contains(vw));
        EXPECT_TRUE(all_zero_exact(aw.algebra->bracket(m.apply(xv), Vector<Rational>(xv + vw))));
    }
}

TEST(AloffWallach, Classification)
{
    const auto rep = aw_go_classify(2, 1, 3);
    EXPECT_TRUE(rep.consistent);
    EXPECT_TRUE(rep.obstruction_identities);
    ASSERT_EQ(rep.non_go.size(), default_aw_non_go_grid().size());
    for (const auto& e : rep.non_go) {
        EXPECT_EQ(e.overall, Overall::non_go_certified);
        EXPECT_FALSE(e.contradiction);
        EXPECT_NE(aw_cubic(e.certificate_alpha), 0);
    }
    ASSERT_EQ(rep.go.size(), 4u);
    for (const auto& e : rep.go) {
        EXPECT_TRUE(e.witness_identity);
        EXPECT_TRUE(e.solver_matches);
    }
    EXPECT_THROW(aw_go_classify(2, 1, 1, {{Rational(1), Rational(1), Rational(1), Rational(2)}}), std::invalid_argument);
}

TEST(G2, DecompositionInvariants)
{
    for (const auto& [what, ok] : g2_invariants(g2_decomposition_exact()))
        EXPECT_TRUE(ok) << what;
    for (const auto& [what, ok] : g2_invariants(g2_decomposition<double>()))
        EXPECT_TRUE(ok) << what;
}

TEST(G2, DistinctCoefficientsGiveU2)
{
    const auto d = g2_decomposition<double>();
    const auto m = g2_metric(d, Vector<double>{1.0, 2.0, 3.0, 4.0, 5.0});
    const auto k = max_right_isometry_algebra(m);
    EXPECT_EQ(k, sum(d.p(1), d.p(2)));
    EXPECT_THROW(g2_metric(d, Vector<double>{1.0, 2.0}), std::invalid_argument);
}

TEST(G2, ParsesCoefficientSets)
{
    const auto sets = g2_einstein_sets();
    ASSERT_EQ(sets.size(), 3u);
    const auto u2 = parse_coefficients<Rational>(sets[1]);
    EXPECT_EQ(u2[0], 1);
    EXPECT_EQ(u2[2], Rational(11) / 9);
    EXPECT_THROW(parse_coefficients<double>({"1", "2", "x", "4", "5"}), std::invalid_argument);
}

TEST(G2, MainTheoremReproduces)
{
    const auto a = reproduce_main_theorem(1);
    for (const auto& m : a.mismatches)
        ADD_FAILURE() << m;
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.sets[2].perturbations, 16u);
    const auto b = reproduce_main_theorem(7);
    EXPECT_TRUE(b.ok());
    const auto c = reproduce_main_theorem(7);
    ASSERT_EQ(b.sets.size(), c.sets.size());
    for (std::size_t i = 0; i < b.sets.size(); ++i)
        for (std::size_t s = 0; s < b.sets[i].certificate.samples.size(); ++s)
            EXPECT_EQ(b.sets[i].certificate.samples[s].residual, c.sets[i].certificate.samples[s].residual);
}
