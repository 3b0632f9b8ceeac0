#include "gometrics/serialize.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace gometrics;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST(Serialize, ScalarsKeepExactness)
{
    EXPECT_EQ(scalar_json(Rational(Rational(11) / 9)), Json("11/9"));
    EXPECT_TRUE(scalar_json(0.5).is_number());
    EXPECT_TRUE(scalar_json(Surd3::root()).is_string());
    EXPECT_TRUE(optional_json(std::nullopt).is_null());
}

TEST(Serialize, RootSystemDocument)
{
    const Json j = root_system_json(build_g2());
    EXPECT_EQ(j["schema"], kSchemaVersion);
    EXPECT_EQ(j.begin().key(), "schema");
    EXPECT_EQ(j["weyl_group_order"], 12);
    EXPECT_EQ(j["positive_roots"].size(), 6u);
    EXPECT_EQ(j["closed_symmetric_subsystems"].size(), 5u);
    EXPECT_EQ(j["minus_b_scale"], "1/24");
    EXPECT_EQ(Json::parse(j.dump()), j);
}

TEST(Serialize, G2ReportIsStable)
{
    const auto a = g2_report_json(reproduce_main_theorem(7)).dump(2);
    const auto b = g2_report_json(reproduce_main_theorem(7)).dump(2);
    EXPECT_EQ(a, b);
    const Json j = Json::parse(a);
    EXPECT_EQ(j["schema"], "1");
    EXPECT_EQ(j["seed"], 7);
    EXPECT_TRUE(j["ok"].get<bool>());
    ASSERT_EQ(j["sets"].size(), 3u);
    EXPECT_EQ(j["sets"][1]["naturally_reductive"]["h"], "p1+p2+p5");
    EXPECT_TRUE(j["sets"][2]["naturally_reductive"].is_null());
    EXPECT_EQ(j["sets"][2]["certificate"]["overall"], "non_go_certified");
    EXPECT_EQ(j["sets"][2]["perturbation"]["corners"], 16);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"schema", "target", "seed", "sets", "mismatches", "ok"}));
}

TEST(Serialize, AwClassificationDocument)
{
    const Json j = aw_classification_json(aw_go_classify(3, 2, 1));
    EXPECT_TRUE(j["consistent"].get<bool>());
    EXPECT_EQ(j["non_go"].size(), 5u);
    EXPECT_EQ(j["go_family"].size(), 4u);
    EXPECT_EQ(j["non_go"][0]["certificate_alpha"].size(), 7u);
}

TEST(Serialize, AwBracketTableShape)
{
    const auto rows = parse_csv(aw_bracket_table_csv(aloff_wallach<Rational>(2, 1)));
    ASSERT_EQ(rows.size(), 1u + 28u); // header plus C(8, 2) pairs
    EXPECT_EQ(rows[0].size(), 10u);
    EXPECT_EQ(rows[0][0], "lhs");
    for (const auto& r : rows)
        EXPECT_EQ(r.size(), 10u);
    // [Z, X1] = (k - l) X2 = X2 for W_{2,1}
    EXPECT_EQ(rows[2][0], "Z");
    EXPECT_EQ(rows[2][1], "X1");
    EXPECT_EQ(rows[2][5], "1");
    // [Z, X0] = 0
    for (std::size_t c = 2; c < 10; ++c)
        EXPECT_EQ(rows[1][c], "0");
}

TEST(Serialize, G2InclusionMatrix)
{
    const auto rows = parse_csv(g2_inclusion_matrix_csv(g2_decomposition<double>()));
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"bracket", "p1", "p2", "p3", "p4", "p5"}));
    EXPECT_EQ(rows[1], (std::vector<std::string>{"p1", "0", "0", "p3", "p4", "p5"}));
    EXPECT_EQ(rows[2], (std::vector<std::string>{"p2", "0", "p2", "p3", "0", "p5"}));
    EXPECT_EQ(rows[5], (std::vector<std::string>{"p5", "p5", "p5", "p4", "p3", "p1+p2"}));
    // the exact and float decompositions agree
    EXPECT_EQ(g2_inclusion_matrix_csv(g2_decomposition_exact()), g2_inclusion_matrix_csv(g2_decomposition<double>()));
}
