#include "gometrics/spaces.hpp"

#include <gtest/gtest.h>

using namespace gometrics;

namespace {

template <class T>
ModuleDecomposition<T> line_decomposition(const AlgebraPtr<T>& alg)
{
    std::vector<Subspace<T>> blocks;
    for (std::size_t i = 0; i < alg->dim(); ++i)
        blocks.push_back(Subspace<T>::of_indices(alg, {i}));
    return make_decomposition(Subspace<T>::whole(alg), blocks, alg->labels());
}

ModuleDecomposition<Rational> su3_blocks(const AlgebraPtr<Rational>& alg)
{
    return make_decomposition(Subspace<Rational>::whole(alg),
                              {cartan_subspace(alg), root_plane_space(alg, "r12"), root_plane_space(alg, "r13"),
                               root_plane_space(alg, "r23")},
                              {"t", "m1", "m2", "m3"});
}

// Dimension of {X : ad X is skew for the metric G = <A., .>}, computed from
// the structure constants directly.
template <class T>
std::size_t skew_derivation_dim(const MetricEndomorphism<T>& m)
{
    const auto& alg = *m.algebra();
    const std::size_t n = alg.dim();
    const Matrix<T> g = alg.inner() * m.matrix();
    Matrix<T> sys(n * n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                T v(0);
                for (std::size_t k = 0; k < n; ++k)
                    v += alg.structure(x, y, k) * g(k, z) + alg.structure(x, z, k) * g(y, k);
                sys(y * n + z, x) = v;
            }
    return n - rank(sys);
}

} // namespace

TEST(Metrics, ConstructionChecks)
{
    const auto su2 = build_su2<Rational>();
    const auto d = line_decomposition(su2);
    EXPECT_THROW(make_metric(d, Vector<Rational>{Rational(1), Rational(0), Rational(1)}), std::invalid_argument);
    EXPECT_THROW(make_metric(d, Vector<Rational>{Rational(1), Rational(1)}), std::invalid_argument);
    EXPECT_THROW(make_decomposition(Subspace<Rational>::whole(su2),
                                    {Subspace<Rational>::of_indices(su2, {0, 1}), Subspace<Rational>::of_indices(su2, {1, 2})},
                                    {"p", "q"}),
                 std::invalid_argument);
    const auto m = make_metric(d, Vector<Rational>{Rational(1), Rational(2), Rational(3)});
    EXPECT_EQ(m.metric(su2->basis_vector(1), su2->basis_vector(1)), 2);
    EXPECT_EQ(m.scaled_by(Rational(1) / 2).coeffs()[2], Rational(3) / 2);
}

TEST(Metrics, KmaxOnSu2)
{
    const auto su2 = build_su2<Rational>();
    const auto d = line_decomposition(su2);
    const std::vector<std::array<long, 3>> cases = {{1, 2, 3}, {1, 1, 3}, {2, 5, 5}, {4, 4, 4}};
    const std::vector<std::size_t> dims = {0, 1, 1, 3};
    for (std::size_t c = 0; c < cases.size(); ++c) {
        const auto m = make_metric(d, Vector<Rational>{Rational(cases[c][0]), Rational(cases[c][1]), Rational(cases[c][2])});
        const auto k = max_right_isometry_algebra(m);
        EXPECT_EQ(k.dim(), dims[c]);
        EXPECT_EQ(k.dim(), skew_derivation_dim(m));
    }
    const auto k = max_right_isometry_algebra(make_metric(d, Vector<Rational>{Rational(1), Rational(1), Rational(3)}));
    EXPECT_TRUE(k.contains(su2->basis_vector(2)));
}

TEST(Metrics, KmaxOnSu3AgreesWithSkewDerivations)
{
    const auto su3 = build_su3<Rational>();
    const auto d = su3_blocks(su3);
    const std::vector<std::array<long, 4>> cases = {{1, 2, 3, 4}, {2, 5, 5, 3}, {1, 1, 1, 1}, {7, 3, 3, 3}};
    for (const auto& c : cases) {
        const auto m = make_metric(d, Vector<Rational>{Rational(c[0]), Rational(c[1]), Rational(c[2]), Rational(c[3])});
        EXPECT_EQ(max_right_isometry_algebra(m).dim(), skew_derivation_dim(m));
    }
}

TEST(Metrics, KmaxOnG2)
{
    const auto d = g2_decomposition<double>();
    const auto sets = g2_einstein_sets();
    const auto k1 = max_right_isometry_algebra(g2_metric(d, parse_coefficients<double>(sets[0])));
    EXPECT_EQ(k1.dim(), 14u);
    const auto m3 = g2_metric(d, parse_coefficients<double>(sets[2]));
    const auto k3 = max_right_isometry_algebra(m3);
    EXPECT_EQ(k3, sum(d.p(1), d.p(2)));
    EXPECT_EQ(k3.dim(), skew_derivation_dim(m3));
    EXPECT_TRUE(is_adapted(k3, m3));
}

TEST(Metrics, Adaptedness)
{
    const auto su2 = build_su2<Rational>();
    const auto plane = make_decomposition(Subspace<Rational>::whole(su2),
                                          {Subspace<Rational>::of_indices(su2, {0, 1}), Subspace<Rational>::of_indices(su2, {2})},
                                          {"e12", "e3"});
    const auto m = make_metric(plane, Vector<Rational>{Rational(1), Rational(3)});
    EXPECT_TRUE(is_adapted(Subspace<Rational>::of_indices(su2, {2}), m));
    EXPECT_TRUE(is_adapted(Subspace<Rational>(su2), m));
    // e1 sits in the e12 block but moves the rest of that block into e3
    EXPECT_FALSE(is_adapted(Subspace<Rational>::of_indices(su2, {0}), m));
    EXPECT_FALSE(is_adapted(Subspace<Rational>::span(su2, {su2->basis_vector(0) + su2->basis_vector(2)}), m));
    EXPECT_THROW(is_adapted(Subspace<Rational>::of_indices(su2, {0, 1}), m), std::invalid_argument);
    // with one block per line, ad(e3) mixes e1 and e2
    const auto lines = make_metric(line_decomposition(su2), Vector<Rational>{Rational(1), Rational(1), Rational(3)});
    EXPECT_FALSE(is_adapted(Subspace<Rational>::of_indices(su2, {2}), lines));
}

TEST(Metrics, DetectsNaturallyReductiveSu3)
{
    const auto su3 = build_su3<Rational>();
    const auto m = make_metric(su3_blocks(su3), Vector<Rational>{Rational(3), Rational(5), Rational(5), Rational(3)});
    const auto f = detect_naturally_reductive(m, natural_reductive_candidates(m));
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->label, "t+m3");
    ASSERT_TRUE(f->x.has_value());
    EXPECT_EQ(*f->x, 5);
    ASSERT_EQ(f->u.size(), 2u);
    EXPECT_EQ(f->u[0].first, "t");
    EXPECT_EQ(f->u[1].second, 3);
    EXPECT_EQ(reassemble(*f, m), m.matrix());
}

TEST(Metrics, SplitCoefficientOnSu2FactorIsNotNaturallyReductive)
{
    // t + m3 is u(1) + su(2); the coroot of m3 lies in t, so t and m3 need
    // the same coefficient
    const auto su3 = build_su3<Rational>();
    const auto m = make_metric(su3_blocks(su3), Vector<Rational>{Rational(2), Rational(5), Rational(5), Rational(3)});
    EXPECT_FALSE(detect_naturally_reductive(m, natural_reductive_candidates(m)).has_value());
}

TEST(Metrics, GenericSu3IsNotNaturallyReductive)
{
    const auto su3 = build_su3<Rational>();
    const auto m = make_metric(su3_blocks(su3), Vector<Rational>{Rational(1), Rational(2), Rational(3), Rational(4)});
    EXPECT_FALSE(detect_naturally_reductive(m, natural_reductive_candidates(m)).has_value());
}

TEST(Metrics, RootSubsystemCandidatesOnG2)
{
    const auto d = g2_decomposition<double>();
    const auto rs = build_g2();
    const auto m = g2_metric(d, parse_coefficients<double>(g2_einstein_sets()[1]));
    const auto f = detect_naturally_reductive(m, g2_candidates(m, rs));
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->h, sum(sum(d.p(1), d.p(2)), d.p(5)));
    EXPECT_LT(max_abs(Matrix<double>(reassemble(*f, m) - m.matrix())), 1e-12);
}
