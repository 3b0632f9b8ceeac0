#ifndef GOMETRICS_SERIALIZE_HPP
#define GOMETRICS_SERIALIZE_HPP

#include "gometrics/spaces.hpp"

#include <json.hpp>

#include <sstream>

namespace gometrics {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Exact scalars become strings ("p/q", "a+b*sqrt3"), floats stay numbers.
template <class T>
Json scalar_json(const T& x)
{
    if constexpr (is_exact_v<T>)
        return scalar_string(x);
    else
        return to_double(x);
}

template <class T>
Json vector_json(const Vector<T>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(scalar_json(x));
    return a;
}

template <class T>
Json matrix_json(const Matrix<T>& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(scalar_json(m(i, j)));
        a.push_back(row);
    }
    return a;
}

inline Json optional_json(const std::optional<double>& x)
{
    return x ? Json(*x) : Json(nullptr);
}

inline Json root_system_json(const RootSystem& rs)
{
    Json j;
    j["schema"] = kSchemaVersion;
    j["system"] = rs.name;
    j["rank"] = rs.rank;
    j["coordinates"] = "simple roots";
    j["simple_roots"] = rs.simple_names;
    j["gram"] = matrix_json(rs.gram);
    j["minus_b_scale"] = scalar_string(rs.minus_b_scale);
    Json roots = Json::array();
    for (const auto& r : rs.positive) {
        Json e;
        e["label"] = rs.label(r);
        e["coords"] = vector_json(r);
        e["norm2"] = scalar_string(rs.norm2(r));
        roots.push_back(e);
    }
    j["positive_roots"] = roots;
    j["root_count"] = rs.roots.size();
    j["weyl_group_order"] = weyl_group(rs).size();
    Json subs = Json::array();
    for (const auto& s : enumerate_closed_symmetric_subsystems(rs)) {
        Json e;
        e["size"] = s.members.size();
        e["roots"] = s.labels();
        subs.push_back(e);
    }
    j["closed_symmetric_subsystems"] = subs;
    return j;
}

inline Json tolerances_json(const Tolerances& t)
{
    Json j;
    j["feas"] = t.feas;
    j["infeas"] = t.infeas;
    j["sigma"] = t.sigma;
    return j;
}

template <class T>
Json sample_json(const SampleResult<T>& s)
{
    Json j;
    j["X"] = vector_json(s.x);
    j["verdict"] = to_string(s.verdict);
    j["residual"] = s.residual;
    j["smallest_nonzero_singular_value"] = optional_json(s.sigma_min);
    j["decided_by"] = s.decided_by;
    if (s.witness) {
        j["witness"] = vector_json(*s.witness);
        j["witness_verified"] = s.witness_verified;
    }
    return j;
}

template <class T>
Json certificate_json(const GOCertificate<T>& c)
{
    Json j;
    j["mode"] = to_string(c.mode);
    j["arithmetic"] = c.exact ? "exact" : "float";
    j["seed"] = c.seed;
    j["tolerances"] = tolerances_json(c.tolerances);
    j["kmax_dim"] = c.kmax_dim ? Json(*c.kmax_dim) : Json(nullptr);
    j["unknowns"] = c.unknowns;
    Json samples = Json::array();
    for (const auto& s : c.samples)
        samples.push_back(sample_json(s));
    j["samples"] = samples;
    j["overall"] = to_string(c.overall);
    return j;
}

template <class T>
Json metric_json(const MetricEndomorphism<T>& m)
{
    Json j;
    j["algebra"] = m.algebra()->name();
    j["gauge"] = m.algebra()->gauge();
    Json blocks = Json::array();
    const auto& d = m.decomposition();
    for (std::size_t i = 0; i < d.size(); ++i) {
        Json b;
        b["name"] = d.names[i];
        b["dim"] = d.blocks[i].dim();
        b["coefficient"] = scalar_json(m.coeffs()[i]);
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    return j;
}

inline Json ricci_json(const RicciResult& r)
{
    Json j;
    j["gauge"] = r.gauge;
    j["frame"] = r.frame;
    j["c"] = r.einstein_constant;
    j["deviation"] = r.deviation;
    j["scalar_curvature"] = r.scalar_curvature;
    j["ric_matrix"] = matrix_json(r.ric);
    return j;
}

inline Json einstein_json(const EinsteinReport& e, double tol)
{
    Json j;
    j["is_einstein"] = e.is_einstein;
    j["tolerance"] = tol;
    j["c"] = e.c;
    j["deviation"] = e.deviation;
    j["scalar_curvature"] = e.scalar_curvature;
    j["gauge"] = e.gauge;
    return j;
}

inline Json aw_classification_json(const AWClassification& r)
{
    Json j;
    j["k"] = r.k;
    j["l"] = r.l;
    Json ng = Json::array();
    for (const auto& e : r.non_go) {
        Json o;
        Json x = Json::array();
        for (const auto& v : e.x)
            x.push_back(scalar_string(v));
        o["x"] = x;
        o["overall"] = to_string(e.overall);
        o["samples_checked"] = e.samples_checked;
        o["certificate_alpha"] = vector_json(e.certificate_alpha);
        o["obstruction_nonzero"] = e.obstruction_nonzero;
        o["contradiction"] = e.contradiction;
        ng.push_back(o);
    }
    j["non_go"] = ng;
    Json go = Json::array();
    for (const auto& e : r.go) {
        Json o;
        o["x"] = scalar_string(e.x);
        o["x4"] = scalar_string(e.x4);
        o["points_checked"] = e.points_checked;
        o["witness_identity"] = e.witness_identity;
        o["solver_matches_closed_form"] = e.solver_matches;
        go.push_back(o);
    }
    j["go_family"] = go;
    j["obstruction_identities"] = r.obstruction_identities;
    j["consistent"] = r.consistent;
    j["conclusion"] = r.conclusion;
    return j;
}

inline Json g2_report_json(const G2Report& r)
{
    Json j;
    j["schema"] = kSchemaVersion;
    j["target"] = "g2-einstein";
    j["seed"] = r.seed;
    Json sets = Json::array();
    for (const auto& s : r.sets) {
        Json o;
        o["u"] = s.u;
        o["einstein"] = einstein_json(s.einstein, s.einstein_tolerance);
        if (s.natural_label) {
            Json n;
            n["h"] = *s.natural_label;
            n["x"] = s.natural_x ? Json(*s.natural_x) : Json(nullptr);
            Json u = Json::object();
            for (const auto& [name, v] : s.natural_u)
                u[name] = v;
            n["u"] = u;
            o["naturally_reductive"] = n;
        } else {
            o["naturally_reductive"] = nullptr;
        }
        o["kmax_adapted"] = s.kmax_adapted;
        o["kmax_is_p1_p2"] = s.kmax_is_p1_p2;
        o["certificate"] = certificate_json(s.certificate);
        if (s.perturbations) {
            Json p;
            p["corners"] = s.perturbations;
            p["step"] = 1e-6;
            p["worst_deviation"] = s.worst_perturbed_deviation;
            p["non_go_certified"] = s.perturbed_non_go;
            o["perturbation"] = p;
        }
        sets.push_back(o);
    }
    j["sets"] = sets;
    j["mismatches"] = r.mismatches;
    j["ok"] = r.ok();
    return j;
}

/// Brackets [E_i, E_j], i < j, of the frame Z, X0, ..., X6 expressed in
/// that frame (X0 unnormalized), one row per pair.
inline std::string aw_bracket_table_csv(const AloffWallach<Rational>& aw)
{
    const auto& alg = *aw.algebra;
    std::vector<Vector<Rational>> frame = {aw.z};
    std::vector<std::string> names = {"Z"};
    for (std::size_t i = 0; i < 7; ++i) {
        frame.push_back(aw.basis_element(i));
        names.push_back("X" + std::to_string(i));
    }
    std::ostringstream os;
    os << "lhs,rhs";
    for (const auto& n : names)
        os << ',' << n;
    os << '\n';
    for (std::size_t i = 0; i < frame.size(); ++i)
        for (std::size_t j = i + 1; j < frame.size(); ++j) {
            const Vector<Rational> b = alg.bracket(frame[i], frame[j]);
            os << names[i] << ',' << names[j];
            for (const auto& f : frame)
                os << ',' << scalar_string(Rational(alg.inner(b, f) / alg.inner(f, f)));
            os << '\n';
        }
    return os.str();
}

/// Entry (i, j) names the blocks met by [p_i, p_j], "0" when they commute.
template <class T>
std::string g2_inclusion_matrix_csv(const G2Decomposition<T>& d)
{
    const auto& names = d.blocks.names;
    std::ostringstream os;
    os << "bracket";
    for (const auto& n : names)
        os << ',' << n;
    os << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
        os << names[i];
        for (std::size_t j = 0; j < names.size(); ++j) {
            const Subspace<T> pr = module_product(d.blocks.blocks[i], d.blocks.blocks[j]);
            std::string cell;
            for (std::size_t b = 0; b < names.size(); ++b) {
                bool meets = false;
                for (const auto& v : pr.basis())
                    meets = meets || !negligible(d.blocks.blocks[b].project(v), 1.0 + max_abs(v));
                if (meets)
                    cell += (cell.empty() ? "" : "+") + names[b];
            }
            os << ',' << (cell.empty() ? "0" : cell);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace gometrics

#endif // GOMETRICS_SERIALIZE_HPP
