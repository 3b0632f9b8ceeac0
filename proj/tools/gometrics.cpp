#include "gometrics.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace gometrics;

namespace {

enum Exit { kOk = 0, kUsage = 2, kNonGo = 3, kIndeterminate = 4, kMismatch = 5 };

struct RunConfig {
    std::string mode = "auto";
    std::uint64_t seed = 1;
    Tolerances tol;
    double tol_einstein = 1e-5;
    std::string out;
    std::string format = "json";
    std::size_t generic = 8;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        parts.push_back(cur);
    if (!s.empty() && s.back() == sep)
        parts.push_back("");
    return parts;
}

struct SpaceSpec {
    std::string kind; // aw, g2, su3, su2
    long k = 0, l = 0;
};

SpaceSpec parse_space(const std::string& text)
{
    SpaceSpec s;
    if (text.rfind("aw:", 0) == 0) {
        const auto kl = split(text.substr(3), ',');
        if (kl.size() != 2)
            throw UsageError("space 'aw:k,l' needs two integers");
        try {
            std::size_t p1 = 0, p2 = 0;
            s.k = std::stol(kl[0], &p1);
            s.l = std::stol(kl[1], &p2);
            if (p1 != kl[0].size() || p2 != kl[1].size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("space 'aw:k,l' needs two integers, got '" + text + "'");
        }
        s.kind = "aw";
        return s;
    }
    if (text == "lie:g2" || text == "lie:su3" || text == "lie:su2") {
        s.kind = text.substr(4);
        return s;
    }
    throw UsageError("unknown space '" + text + "' (expected aw:k,l, lie:g2, lie:su3 or lie:su2)");
}

struct MetricSpec {
    std::vector<std::string> raw;
    bool decimal = false;
};

MetricSpec parse_metric(const std::string& text, std::size_t expected)
{
    MetricSpec m;
    m.raw = split(text, ',');
    if (m.raw.size() != expected)
        throw UsageError("metric needs " + std::to_string(expected) + " comma-separated coefficients, got " +
                         std::to_string(m.raw.size()));
    for (const auto& c : m.raw) {
        Rational q;
        try {
            q = parse_rational(c);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("metric: ") + e.what());
        }
        if (sgn(q) <= 0)
            throw UsageError("metric coefficients must be positive, got '" + c + "'");
        m.decimal = m.decimal || c.find('.') != std::string::npos;
    }
    return m;
}

std::size_t block_count(const SpaceSpec& s)
{
    if (s.kind == "aw")
        return 4;
    if (s.kind == "g2")
        return 5;
    if (s.kind == "su3")
        return 4;
    return 3;
}

template <class T>
Vector<T> coefficients(const MetricSpec& m)
{
    Vector<T> v;
    for (const auto& c : m.raw) {
        const Rational q = parse_rational(c);
        if constexpr (is_exact_v<T>)
            v.push_back(from_rational<T>(q));
        else
            v.push_back(q.get_d());
    }
    return v;
}

bool use_exact(const RunConfig& cfg, const MetricSpec& m)
{
    if (cfg.mode != "auto" && cfg.mode != "exact" && cfg.mode != "float")
        throw UsageError("--mode must be auto, exact or float");
    if (m.decimal) {
        if (cfg.mode == "exact")
            std::cerr << "note: decimal coefficients force float mode\n";
        return false;
    }
    return cfg.mode != "float";
}

/// Block decompositions of the Lie group cases.
template <class T>
ModuleDecomposition<T> su3_blocks(const AlgebraPtr<T>& g)
{
    return make_decomposition(Subspace<T>::whole(g),
                              {cartan_subspace(g), root_plane_space(g, "r12"), root_plane_space(g, "r13"),
                               root_plane_space(g, "r23")},
                              {"t", "m1", "m2", "m3"});
}

template <class T>
ModuleDecomposition<T> su2_blocks(const AlgebraPtr<T>& g)
{
    return make_decomposition(Subspace<T>::whole(g),
                              {Subspace<T>::of_indices(g, {0}), Subspace<T>::of_indices(g, {1}),
                               Subspace<T>::of_indices(g, {2})},
                              {"e1", "e2", "e3"});
}

template <class T>
MetricEndomorphism<T> lie_metric(const SpaceSpec& s, const Vector<T>& u)
{
    if (s.kind == "g2") {
        if constexpr (std::is_same_v<T, Rational>)
            throw std::logic_error("g2 needs Q(sqrt3) or double");
        else
            return g2_metric(g2_decomposition<T>(), u);
    } else if (s.kind == "su3") {
        if constexpr (std::is_same_v<T, Surd3>)
            throw std::logic_error("su3 is rational");
        else
            return make_metric(su3_blocks(build_su3<T>()), u);
    } else {
        if constexpr (std::is_same_v<T, Surd3>)
            throw std::logic_error("su2 is rational");
        else
            return make_metric(su2_blocks(build_su2<T>()), u);
    }
}

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    const std::string tmp = cfg.out + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot write '" + tmp + "'");
        os << text;
        if (!os)
            throw std::runtime_error("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), cfg.out.c_str()) != 0)
        throw std::runtime_error("cannot move output to '" + cfg.out + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json config_json(const RunConfig& cfg, bool exact)
{
    Json j;
    j["mode"] = exact ? "exact" : "float";
    j["seed"] = cfg.seed;
    j["tolerances"] = tolerances_json(cfg.tol);
    j["tol_einstein"] = cfg.tol_einstein;
    return j;
}

void require_json_or_text(const RunConfig& cfg)
{
    if (cfg.format != "json" && cfg.format != "text")
        throw UsageError("this command writes json or text");
}

int exit_for(Overall o)
{
    switch (o) {
    case Overall::go_confirmed_on_samples: return kOk;
    case Overall::non_go_certified: return kNonGo;
    default: return kIndeterminate;
    }
}

int cmd_roots(const RunConfig& cfg, const std::string& name)
{
    RootSystem rs;
    try {
        rs = build_root_system(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "class,size,roots\n";
        std::size_t i = 0;
        for (const auto& s : enumerate_closed_symmetric_subsystems(rs)) {
            os << ++i << ',' << s.members.size() << ",\"";
            const auto labels = s.labels();
            for (std::size_t j = 0; j < labels.size(); ++j)
                os << (j ? " " : "") << labels[j];
            os << "\"\n";
        }
        emit(cfg, os.str());
        return kOk;
    }
    const Json j = root_system_json(rs);
    if (cfg.format == "text") {
        std::ostringstream os;
        os << rs.name << ": " << rs.roots.size() << " roots, |W| = " << j["weyl_group_order"] << "\n";
        for (const auto& s : j["closed_symmetric_subsystems"])
            os << "  " << s["roots"].dump() << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, dump(j));
    }
    return kOk;
}

template <class T>
Json run_aw_go_check(const RunConfig& cfg, const SpaceSpec& sp, const MetricSpec& ms, const std::string& formulation,
                     Overall& overall)
{
    const AloffWallach<T> aw = aloff_wallach<T>(sp.k, sp.l);
    require_not_excluded(aw);
    const Vector<T> x = coefficients<T>(ms);
    const auto metric = aw_metric(aw, x[0], x[1], x[2], x[3]);
    const auto samples = standard_samples(aw.blocks, cfg.seed, cfg.generic);
    GOCertificate<T> cert;
    if (formulation == "normal-transitive") {
        cert = homogeneous_go_check(aw.space, metric, Formulation::normal_transitive, samples, cfg.seed, cfg.tol);
    } else if (formulation == "reduced") {
        cert = homogeneous_go_check(aw.space, metric, Formulation::reduced, samples, cfg.seed, cfg.tol,
                                    {aw_reduced_operator(aw)});
    } else if (formulation == "direct") {
        const auto ext = extend_by_centralizer(aw.space, metric);
        std::vector<Vector<T>> lifted;
        for (const auto& s : samples)
            lifted.push_back(ext.lift(s));
        cert = homogeneous_go_check(ext.space, *ext.metric, Formulation::direct, lifted, cfg.seed, cfg.tol);
    } else {
        throw UsageError("--formulation must be direct, reduced or normal-transitive");
    }
    overall = cert.overall;
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "go-check";
    j["space"] = "aw:" + std::to_string(sp.k) + "," + std::to_string(sp.l);
    j["config"] = config_json(cfg, is_exact_v<T>);
    j["metric"] = metric_json(metric);
    j["certificate"] = certificate_json(cert);
    return j;
}

template <class T>
Json run_lie_go_check(const RunConfig& cfg, const SpaceSpec& sp, const MetricSpec& ms, Overall& overall)
{
    const auto metric = lie_metric<T>(sp, coefficients<T>(ms));
    const auto samples = standard_samples(metric.decomposition(), cfg.seed, cfg.generic);
    const auto cert = lie_group_go_check(metric, samples, cfg.seed, cfg.tol);
    overall = cert.overall;
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "go-check";
    j["space"] = "lie:" + sp.kind;
    j["config"] = config_json(cfg, is_exact_v<T>);
    j["metric"] = metric_json(metric);
    j["certificate"] = certificate_json(cert);
    return j;
}

int cmd_go_check(const RunConfig& cfg, const std::string& space, const std::string& metric_text,
                 const std::string& formulation)
{
    require_json_or_text(cfg);
    const SpaceSpec sp = parse_space(space);
    const MetricSpec ms = parse_metric(metric_text, block_count(sp));
    const bool exact = use_exact(cfg, ms);
    Overall overall = Overall::indeterminate;
    Json j;
    if (sp.kind == "aw") {
        if (!formulation.empty() && formulation != "direct" && formulation != "reduced" &&
            formulation != "normal-transitive")
            throw UsageError("--formulation must be direct, reduced or normal-transitive");
        const std::string f = formulation.empty() ? "normal-transitive" : formulation;
        j = exact ? run_aw_go_check<Rational>(cfg, sp, ms, f, overall)
                  : run_aw_go_check<double>(cfg, sp, ms, f, overall);
    } else {
        if (!formulation.empty() && formulation != "lie-group")
            throw UsageError("Lie group spaces use the lie-group formulation");
        if (!exact)
            j = run_lie_go_check<double>(cfg, sp, ms, overall);
        else if (sp.kind == "g2")
            j = run_lie_go_check<Surd3>(cfg, sp, ms, overall);
        else
            j = run_lie_go_check<Rational>(cfg, sp, ms, overall);
    }
    if (cfg.format == "text") {
        const auto& c = j["certificate"];
        emit(cfg, j["space"].get<std::string>() + " metric " + metric_text + ": " + c["overall"].get<std::string>() +
                      " (" + c["mode"].get<std::string>() + ", " + std::to_string(c["samples"].size()) +
                      " samples)\n");
    } else {
        emit(cfg, dump(j));
    }
    return exit_for(overall);
}

int cmd_einstein_check(const RunConfig& cfg, const std::string& space, const std::string& metric_text)
{
    require_json_or_text(cfg);
    const SpaceSpec sp = parse_space(space);
    if (sp.kind == "aw")
        throw UsageError("einstein-check works on Lie group spaces (lie:g2, lie:su3, lie:su2)");
    const MetricSpec ms = parse_metric(metric_text, block_count(sp));
    const auto metric = lie_metric<double>(sp, coefficients<double>(ms));
    const RicciResult r = ricci_left_invariant(metric);
    const bool einstein = r.deviation <= cfg.tol_einstein;
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "einstein-check";
    j["space"] = "lie:" + sp.kind;
    j["metric"] = metric_json(metric);
    j["tol_einstein"] = cfg.tol_einstein;
    j["is_einstein"] = einstein;
    j["ricci"] = ricci_json(r);
    if (cfg.format == "text") {
        std::ostringstream os;
        os << j["space"].get<std::string>() << " metric " << metric_text << ": "
           << (einstein ? "Einstein" : "not Einstein") << ", c = " << r.einstein_constant
           << ", deviation = " << r.deviation << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, dump(j));
    }
    return einstein ? kOk : kNonGo;
}

int cmd_reproduce(const RunConfig& cfg, const std::string& target)
{
    require_json_or_text(cfg);
    cfg.tol.validate();
    Json j;
    std::vector<std::string> failures;
    if (target == "g2-einstein") {
        const G2Report rep = reproduce_main_theorem(cfg.seed, cfg.tol, cfg.tol_einstein);
        j = g2_report_json(rep);
        failures = rep.mismatches;
    } else if (target == "aw-classification") {
        j["schema"] = kSchemaVersion;
        j["target"] = target;
        j["seed"] = cfg.seed;
        Json spaces = Json::array();
        for (auto [k, l] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}}) {
            const AWClassification rep = aw_go_classify(k, l, cfg.seed);
            if (!rep.consistent)
                failures.push_back("W_{" + std::to_string(k) + "," + std::to_string(l) + "}: " + rep.conclusion);
            spaces.push_back(aw_classification_json(rep));
        }
        j["spaces"] = spaces;
        j["mismatches"] = failures;
        j["ok"] = failures.empty();
    } else {
        throw UsageError("unknown reproduce target '" + target + "' (expected aw-classification or g2-einstein)");
    }
    if (cfg.format == "text") {
        std::ostringstream os;
        os << target << ": " << (failures.empty() ? "all checks match" : "MISMATCH") << "\n";
        for (const auto& f : failures)
            os << "  failed: " << f << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, dump(j));
    }
    for (const auto& f : failures)
        std::cerr << "mismatch: " << f << "\n";
    return failures.empty() ? kOk : kMismatch;
}

int cmd_export(const RunConfig& cfg, const std::string& what, const std::string& space)
{
    if (cfg.format == "text")
        throw UsageError("export writes csv");
    if (what == "aw-brackets") {
        const SpaceSpec sp = parse_space(space.empty() ? "aw:2,1" : space);
        if (sp.kind != "aw")
            throw UsageError("aw-brackets needs --space aw:k,l");
        emit(cfg, aw_bracket_table_csv(aloff_wallach<Rational>(sp.k, sp.l)));
        return kOk;
    }
    if (what == "g2-inclusions") {
        emit(cfg, g2_inclusion_matrix_csv(g2_decomposition_exact()));
        return kOk;
    }
    throw UsageError("unknown export '" + what + "' (expected aw-brackets or g2-inclusions)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Geodesic orbit and Einstein checks for compact Lie groups and Aloff-Wallach spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--mode", cfg.mode, "auto, exact or float")->envname("GOMETRICS_MODE");
    app.add_option("--seed", cfg.seed, "sampling seed")->envname("GOMETRICS_SEED");
    app.add_option("--tol-feas", cfg.tol.feas, "feasible residual bound")->envname("GOMETRICS_TOL_FEAS");
    app.add_option("--tol-infeas", cfg.tol.infeas, "infeasible residual bound")->envname("GOMETRICS_TOL_INFEAS");
    app.add_option("--tol-einstein", cfg.tol_einstein, "Einstein deviation bound")->envname("GOMETRICS_TOL_EINSTEIN");
    app.add_option("--out", cfg.out, "output file (default stdout)")->envname("GOMETRICS_OUT");
    app.add_option("--format", cfg.format, "json, csv or text")->envname("GOMETRICS_FORMAT");
    app.add_option("--generic", cfg.generic, "generic samples per kind")->envname("GOMETRICS_GENERIC");

    std::string system;
    auto* roots = app.add_subcommand("roots", "root data and closed symmetric subsystems");
    roots->add_option("system", system, "a2 or g2")->required();

    std::string space, metric, formulation;
    auto* go = app.add_subcommand("go-check", "GO certificate for a metric");
    go->add_option("--space", space, "aw:k,l | lie:g2 | lie:su3 | lie:su2")->required();
    go->add_option("--metric", metric, "comma-separated coefficients")->required();
    go->add_option("--formulation", formulation, "aw: direct | reduced | normal-transitive");

    std::string espace, emetric;
    auto* ein = app.add_subcommand("einstein-check", "Ricci tensor and Einstein test");
    ein->add_option("--space", espace, "lie:g2 | lie:su3 | lie:su2")->required();
    ein->add_option("--metric", emetric, "comma-separated coefficients")->required();

    std::string target;
    auto* rep = app.add_subcommand("reproduce", "rerun a classification with its expected verdicts");
    rep->add_option("target", target, "aw-classification or g2-einstein")->required();

    std::string what, xspace;
    auto* exp = app.add_subcommand("export", "CSV tables");
    exp->add_option("table", what, "aw-brackets or g2-inclusions")->required();
    exp->add_option("--space", xspace, "aw:k,l for aw-brackets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
            throw UsageError("--format must be json, csv or text");
        try {
            cfg.tol.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (!(cfg.tol_einstein > 0))
            throw UsageError("--tol-einstein must be positive");
        if (*roots)
            return cmd_roots(cfg, system);
        if (cfg.format == "csv" && !*exp)
            throw UsageError("csv output is only available for roots and export");
        if (*go)
            return cmd_go_check(cfg, space, metric, formulation);
        if (*ein)
            return cmd_einstein_check(cfg, espace, emetric);
        if (*rep)
            return cmd_reproduce(cfg, target);
        if (*exp)
            return cmd_export(cfg, what, xspace);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ExcludedCaseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
