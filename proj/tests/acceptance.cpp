// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance <path to gometrics cli> <scratch dir>

#include "gometrics/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace gometrics;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string g_cli;
std::string g_dir;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args)
{
    const std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// ---------------------------------------------------------------------------

Outcome algebra_validity()
{
    Outcome o;
    auto check_exact = [&](const auto& alg) {
        bool zero = false;
        alg->jacobi_defect(&zero);
        o.require(zero, alg->name() + " Jacobi");
        alg->invariance_defect(alg->killing(), &zero);
        o.require(zero, alg->name() + " B-invariance");
    };
    auto check_float = [&](const auto& alg) {
        o.require(alg->jacobi_defect() <= 1e-12, alg->name() + " float Jacobi");
        o.require(alg->invariance_defect(alg->killing()) <= 1e-12, alg->name() + " float B-invariance");
    };
    const auto su3 = build_su3<Rational>();
    const auto g2 = build_g2_exact();
    check_exact(su3);
    check_exact(g2);
    check_float(build_su3<double>());
    check_float(convert_algebra<double>(*g2));
    return o;
}

Outcome killing_normalization()
{
    Outcome o;
    const auto su3 = build_su3<Rational>();
    o.require(su3->killing() == Rational(-12) * su3->inner(), "B != -12 <.,.>");
    return o;
}

// Closed symmetric subsets of G2 by brute force over all 2^12 subsets, up to
// the group generated by the root reflections, built here from the Gram matrix.
Outcome root_classification()
{
    Outcome o;
    const RootSystem rs = build_g2();
    const std::size_t n = rs.roots.size();
    auto index = [&](const Weight& w) {
        for (std::size_t i = 0; i < n; ++i)
            if (rs.roots[i] == w)
                return i;
        return n;
    };
    auto add = [](const Weight& a, const Weight& b) { return Weight{Rational(a[0] + b[0]), Rational(a[1] + b[1])}; };
    std::vector<std::vector<std::size_t>> gens;
    for (const auto& a : rs.roots) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational c = 2 * rs.inner(rs.roots[i], a) / rs.inner(a, a);
            p[i] = index(Weight{Rational(rs.roots[i][0] - c * a[0]), Rational(rs.roots[i][1] - c * a[1])});
        }
        gens.push_back(p);
    }
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i)
        id[i] = i;
    std::set<std::vector<std::size_t>> group{id};
    std::vector<std::vector<std::size_t>> queue{id};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : gens) {
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i)
                c[i] = g[queue[q][i]];
            if (group.insert(c).second)
                queue.push_back(c);
        }
    o.require(group.size() == 12, "Weyl group order");
    auto canon = [&](unsigned mask) {
        unsigned best = mask;
        for (const auto& g : group) {
            unsigned img = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1U)
                    img |= 1U << g[i];
            best = std::min(best, img);
        }
        return best;
    };
    std::set<unsigned> oracle;
    for (unsigned mask = 0; mask + 1 < (1U << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1U))
                continue;
            ok = mask >> index(-rs.roots[i]) & 1U;
            for (std::size_t j = 0; j < n && ok; ++j) {
                const std::size_t s = index(add(rs.roots[i], rs.roots[j]));
                if ((mask >> j & 1U) && s < n)
                    ok = mask >> s & 1U;
            }
        }
        if (ok)
            oracle.insert(canon(mask));
    }
    o.require(oracle.size() == 5, "oracle found " + std::to_string(oracle.size()) + " classes");

    const std::string out = g_dir + "/roots_g2.json";
    o.require(run_cli("roots g2 --format json --out \"" + out + "\"") == 0, "roots g2 exit code");
    const Json j = Json::parse(read_file(out));
    std::set<unsigned> cli;
    const auto& listed = j["closed_symmetric_subsystems"];
    for (const auto& cls : listed) {
        unsigned mask = 0;
        for (const auto& label : cls["roots"]) {
            const std::string name = label.get<std::string>().substr(2);
            for (std::size_t i = 0; i < n; ++i)
                if (rs.is_positive(rs.roots[i]) && rs.label(rs.roots[i]) == name)
                    mask |= (1U << i) | (1U << index(-rs.roots[i]));
        }
        cli.insert(canon(mask));
    }
    o.require(listed.size() == 5, "cli lists " + std::to_string(listed.size()) + " classes");
    o.require(cli == oracle, "cli classes differ from the oracle up to W");
    const std::vector<std::vector<std::string>> expected = {
        {}, {"+-a"}, {"+-b"}, {"+-b", "+-2a+3b"}, {"+-a", "+-a+3b", "+-2a+3b"}};
    std::vector<std::vector<std::string>> got;
    for (const auto& cls : listed)
        got.push_back(cls["roots"].get<std::vector<std::string>>());
    o.require(got == expected, "representatives differ from the published list");
    return o;
}

Outcome g2_decomposition_checks()
{
    Outcome o;
    const auto& d = g2_decomposition_exact();
    for (const auto& [what, ok] : g2_invariants(d))
        o.require(ok, what);
    o.require(g2_block_relations(d).size() == 6, "six block relations");
    return o;
}

Outcome ricci_oracle()
{
    Outcome o;
    auto quarter = [&](const RicciResult& r, const std::string& what) {
        const std::size_t n = r.ric_metric_frame.rows();
        double dev = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                dev = std::max(dev, std::abs(r.ric_metric_frame(i, j) - (i == j ? 0.25 : 0.0)));
        o.require(dev <= 1e-12 && r.deviation <= 1e-12, what + " Ric != 1/4");
    };
    const auto g2 = g2_decomposition<double>();
    quarter(ricci_left_invariant(g2_metric(g2, Vector<double>(5, 1.0))), "g2");
    const auto su3 = with_minus_b_gauge(*build_su3<Rational>());
    const auto d3 = make_decomposition(Subspace<Rational>::whole(su3), {Subspace<Rational>::whole(su3)}, {"g"});
    quarter(ricci_left_invariant(make_metric(d3, Vector<Rational>{Rational(1)})), "su3");

    const auto su2 = build_su2<double>();
    std::vector<Subspace<double>> lines;
    for (std::size_t i = 0; i < 3; ++i)
        lines.push_back(Subspace<double>::of_indices(su2, {i}));
    const auto d2 = make_decomposition(Subspace<double>::whole(su2), lines, {"e1", "e2", "e3"});
    for (const auto& a : std::vector<std::array<double, 3>>{{1, 2, 3}, {1, 1, 3}, {0.3, 5, 2}}) {
        const auto r = ricci_left_invariant(make_metric(d2, Vector<double>{a[0], a[1], a[2]}));
        const double l[3] = {std::sqrt(a[0] / (a[1] * a[2])), std::sqrt(a[1] / (a[0] * a[2])),
                             std::sqrt(a[2] / (a[0] * a[1]))};
        const double h = 0.5 * (l[0] + l[1] + l[2]);
        const double mu[3] = {h - l[0], h - l[1], h - l[2]};
        const double expect[3] = {2 * mu[1] * mu[2], 2 * mu[0] * mu[2], 2 * mu[0] * mu[1]};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                o.require(std::abs(r.ric_metric_frame(i, j) - (i == j ? expect[i] : 0.0)) <= 1e-12,
                          "su2 Milnor mismatch");
    }
    return o;
}

Outcome einstein_reproduction()
{
    Outcome o;
    const auto d = g2_decomposition<double>();
    const auto sets = g2_einstein_sets();
    for (std::size_t i = 0; i < 3; ++i) {
        const auto e = einstein_check(g2_metric(d, parse_coefficients<double>(sets[i])), i < 2 ? 1e-12 : 1e-5);
        o.require(e.is_einstein, "set " + std::to_string(i + 1) + " deviation " + std::to_string(e.deviation));
    }
    const auto u = parse_coefficients<double>(sets[2]);
    double worst = 0;
    for (unsigned corner = 0; corner < 16; ++corner) {
        Vector<double> up = u;
        for (std::size_t i = 0; i < 4; ++i)
            up[i] += (corner >> i & 1U) ? 1e-6 : -1e-6;
        worst = std::max(worst, ricci_left_invariant(g2_metric(d, up)).deviation);
    }
    o.require(worst <= 1e-4, "perturbed deviation " + std::to_string(worst));
    return o;
}

Outcome natural_reductivity()
{
    Outcome o;
    const auto d = g2_decomposition<double>();
    const RootSystem rs = build_g2();
    const auto sets = g2_einstein_sets();
    const auto m2 = g2_metric(d, parse_coefficients<double>(sets[1]));
    const auto f = detect_naturally_reductive(m2, g2_candidates(m2, rs));
    o.require(f.has_value(), "set 2 has no DZ form");
    if (f) {
        o.require(f->label == "p1+p2+p5", "set 2 h = " + f->label);
        o.require(f->h == sum(sum(d.p(1), d.p(2)), d.p(5)), "set 2 h is not p1+p2+p5");
        o.require(f->x && std::abs(*f->x - 11.0 / 9.0) <= 1e-12, "set 2 x != 11/9");
        for (const auto& [name, v] : f->u)
            o.require(std::abs(v - 1.0) <= 1e-12, "set 2 u(" + name + ") != 1");
    }
    const auto m3 = g2_metric(d, parse_coefficients<double>(sets[2]));
    o.require(!detect_naturally_reductive(m3, g2_candidates(m3, rs)).has_value(), "set 3 matched a candidate");
    return o;
}

Outcome g2_non_go()
{
    Outcome o;
    const auto d = g2_decomposition<double>();
    const auto u = parse_coefficients<double>(g2_einstein_sets()[2]);
    const auto m = g2_metric(d, u);
    const auto k = max_right_isometry_algebra(m);
    o.require(k.dim() == 4, "dim k_max = " + std::to_string(k.dim()));
    o.require(is_subalgebra(k), "k_max not a subalgebra");
    o.require(k == sum(d.p(1), d.p(2)), "k_max != p1+p2");
    const auto samples = g2_samples(d, 1);
    auto certified = [&](const MetricEndomorphism<double>& metric) {
        const auto cert = lie_group_go_check(metric, samples, 1);
        bool found = false;
        for (const auto& s : cert.samples)
            found = found || (s.verdict == Verdict::infeasible && s.residual >= 1e-3 && s.sigma_min &&
                              *s.sigma_min >= 1e-6);
        return found && cert.overall == Overall::non_go_certified;
    };
    o.require(certified(m), "no certified infeasible sample");
    for (unsigned corner = 0; corner < 16; ++corner) {
        Vector<double> up = u;
        for (std::size_t i = 0; i < 4; ++i)
            up[i] += (corner >> i & 1U) ? 1e-6 : -1e-6;
        o.require(certified(g2_metric(d, up)), "corner " + std::to_string(corner) + " not certified");
    }
    return o;
}

Outcome aw_classification()
{
    Outcome o;
    std::size_t certified = 0;
    for (auto [k, l] : {std::pair{2L, 1L}, std::pair{3L, 1L}, std::pair{3L, 2L}}) {
        const auto rep = aw_go_classify(k, l, 1);
        const std::string tag = "W" + std::to_string(k) + std::to_string(l);
        o.require(rep.consistent, tag + " inconsistent");
        for (const auto& e : rep.non_go)
            certified += e.overall == Overall::non_go_certified;
        for (const auto& g : rep.go)
            o.require(g.witness_identity && g.solver_matches, tag + " closed-form witness");
        // o1 + o2 + o3 = 0 and o = 0 for x1 = x2 = x3 on the degree-2 set. The o_i
        // are cubic in alpha, so nonvanishing off the boundary needs the degree-3 set.
        const auto aw = aloff_wallach<Rational>(k, l);
        for (const auto& x : std::vector<std::array<long, 3>>{{1, 2, 3}, {2, 2, 5}, {3, 3, 3}}) {
            const bool equal = x[0] == x[1] && x[1] == x[2];
            for (const auto& a : unisolvent_points(7, 2)) {
                const auto ob = aw_obstruction(aw, Rational(x[0]), Rational(x[1]), Rational(x[2]), a);
                o.require(ob[0] + ob[1] + ob[2] == 0, tag + " o1+o2+o3 != 0");
                if (equal)
                    o.require(sgn(ob[0]) == 0 && sgn(ob[1]) == 0, tag + " o != 0 on the boundary");
            }
            bool any = false;
            for (const auto& a : unisolvent_points(7, 3)) {
                const auto ob = aw_obstruction(aw, Rational(x[0]), Rational(x[1]), Rational(x[2]), a);
                any = any || sgn(ob[0]) != 0 || sgn(ob[1]) != 0 || sgn(ob[2]) != 0;
            }
            o.require(any != equal, tag + " obstruction boundary");
        }
    }
    o.require(certified >= 10, std::to_string(certified) + " certified grid metrics");
    return o;
}

Outcome formulation_agreement()
{
    Outcome o;
    const auto aw = aloff_wallach<Rational>(2, 1);
    const std::vector<Matrix<Rational>> ops = {aw_reduced_operator(aw)};
    const auto kc = std::optional<Subspace<Rational>>(centralizer_in_m(aw.space));
    const std::vector<std::array<long, 4>> metrics = {{1, 1, 1, 1}, {2, 2, 2, 3}, {1, 2, 3, 1}, {1, 1, 2, 3}};
    std::size_t compared = 0, disagreements = 0;
    for (std::size_t mi = 0; mi < metrics.size(); ++mi) {
        const auto& x = metrics[mi];
        const auto m = aw_metric(aw, Rational(x[0]), Rational(x[1]), Rational(x[2]), Rational(x[3]));
        const auto ext = extend_by_centralizer(aw.space, m);
        for (const auto& v : sample_tangent_vectors(aw.blocks, SampleStrategy::uniform_sphere, 100 + mi, 25)) {
            const auto a = go_feasible_direct(ext.space, *ext.metric, ext.lift(v));
            const auto b = go_feasible_reduced(aw.space, m, ops, v);
            const auto c = go_normal_transitive(aw.space, m, v, {}, kc);
            ++compared;
            if (!(a.verdict == b.verdict && b.verdict == c.verdict))
                ++disagreements;
        }
    }
    o.require(compared == 100, std::to_string(compared) + " samples");
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    return o;
}

Outcome su2_sanity()
{
    Outcome o;
    auto metric = [](auto a, auto b, auto c) {
        using T = decltype(a);
        const auto su2 = build_su2<T>();
        std::vector<Subspace<T>> lines;
        for (std::size_t i = 0; i < 3; ++i)
            lines.push_back(Subspace<T>::of_indices(su2, {i}));
        return make_metric(make_decomposition(Subspace<T>::whole(su2), lines, {"e1", "e2", "e3"}), Vector<T>{a, b, c});
    };
    for (auto [a, c] : {std::pair{1L, 3L}, std::pair{2L, 1L}, std::pair{5L, 5L}}) {
        const auto me = metric(Rational(a), Rational(a), Rational(c));
        o.require(lie_group_go_check(me, standard_samples(me.decomposition(), 1, 8), 1).overall ==
                      Overall::go_confirmed_on_samples,
                  "exact diag(a,a,c) not GO");
        const auto mf = metric(double(a), double(a), double(c));
        o.require(lie_group_go_check(mf, standard_samples(mf.decomposition(), 1, 8), 1).overall ==
                      Overall::go_confirmed_on_samples,
                  "float diag(a,a,c) not GO");
    }
    const auto m = metric(Rational(1), Rational(2), Rational(3));
    const auto cert = lie_group_go_check(m, standard_samples(m.decomposition(), 1, 8), 1);
    o.require(cert.exact && cert.overall == Overall::non_go_certified, "diag(1,2,3) not certified non-GO");
    return o;
}

Outcome determinism()
{
    Outcome o;
    const std::string a = g_dir + "/reproduce_a.json", b = g_dir + "/reproduce_b.json";
    std::remove(a.c_str());
    std::remove(b.c_str());
    o.require(run_cli("reproduce g2-einstein --seed 7 --out \"" + a + "\"") == 0, "first run exit code");
    o.require(run_cli("reproduce g2-einstein --seed 7 --out \"" + b + "\"") == 0, "second run exit code");
    const std::string ja = read_file(a), jb = read_file(b);
    o.require(!ja.empty(), "empty report");
    o.require(ja == jb, "reports differ");
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance <gometrics cli> <scratch dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_dir = argv[2];

    struct Criterion {
        int id;
        const char* name;
        double budget_ms;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "algebra validity", 1000, algebra_validity},
        {2, "Killing normalization", 1000, killing_normalization},
        {3, "root classification", 1000, root_classification},
        {4, "g2 decomposition", 1000, g2_decomposition_checks},
        {5, "Ricci oracle", 1000, ricci_oracle},
        {6, "Einstein reproduction", 5000, einstein_reproduction},
        {7, "natural reductivity detection", 1000, natural_reductivity},
        {8, "G2 non-GO certificate", 10000, g2_non_go},
        {9, "AW classification", 10000, aw_classification},
        {10, "formulation agreement", 5000, formulation_agreement},
        {11, "su(2) sanity", 1000, su2_sanity},
        {12, "determinism", 10000, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out.require(ms <= c.budget_ms, "over time budget");
        failures += !out.ok;
        std::printf("criterion %2d: %s  %-30s %8.1f ms%s%s\n", c.id, out.ok ? "PASS" : "FAIL", c.name, ms,
                    out.detail.empty() ? "" : "  ", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
