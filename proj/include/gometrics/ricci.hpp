#ifndef GOMETRICS_RICCI_HPP
#define GOMETRICS_RICCI_HPP

#include "gometrics/metrics.hpp"

namespace gometrics {

/// Ricci tensor of a left-invariant metric. `ric` is the bilinear form in a
/// <.,.>-orthonormal frame; `ric_metric_frame` is the same form in a
/// (.,.)-orthonormal frame, where the Einstein condition reads Ric = c I.
struct RicciResult {
    Matrix<double> ric;
    Matrix<double> ric_metric_frame;
    Matrix<double> ric_basis; // on the algebra's own basis
    double einstein_constant = 0;
    double deviation = 0;
    double scalar_curvature = 0;
    std::string gauge;
    std::string frame = "<.,.>-orthonormal (Cholesky of the Gram matrix)";
};

/// Structure-constant formula for unimodular groups in an orthonormal frame f_a:
/// Ric_ab = -1/2 sum c_aik c_bik - 1/2 B_ab + 1/4 sum c_ija c_ijb.
template <class T>
RicciResult ricci_left_invariant(const MetricEndomorphism<T>& metric)
{
    const auto& alg = *metric.algebra();
    const std::size_t n = alg.dim();
    if (metric.decomposition().ambient.dim() != n)
        throw std::invalid_argument("ricci_left_invariant: metric blocks must span the algebra");
    for (std::size_t i = 0; i < n; ++i) {
        double tr = 0;
        for (std::size_t j = 0; j < n; ++j)
            tr += to_double(alg.structure(i, j, j));
        if (std::abs(tr) > 1e-12)
            throw std::invalid_argument("ricci_left_invariant: algebra is not unimodular");
    }
    const Matrix<double> g = convert<double>(alg.inner());
    const Matrix<double> a = convert<double>(metric.matrix());
    Matrix<double> gm = g * a;
    gm = 0.5 * (gm + gm.transpose());
    const Matrix<double> lm = cholesky(gm);
    const Matrix<double> lmt = lm.transpose();
    const Matrix<double> frame = inverse(lmt); // columns: (.,.)-orthonormal frame

    // c[a][b][k]: [f_a, f_b] = sum_k c f_k, coordinates via L_m^T
    std::vector<double> c(n * n * n, 0.0);
    auto cc = [&](std::size_t i, std::size_t j, std::size_t k) -> double& { return c[(i * n + j) * n + k]; };
    const AlgebraPtr<double> algd = convert_algebra<double>(alg);
    const std::vector<Vector<double>> f = frame.columns();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector<double> br = lmt * algd->bracket(f[i], f[j]);
            for (std::size_t k = 0; k < n; ++k) {
                cc(i, j, k) = br[k];
                cc(j, i, k) = -br[k];
            }
        }
    Matrix<double> ric(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) {
            double t1 = 0, kil = 0, t3 = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    t1 += cc(x, i, k) * cc(y, i, k);
                    kil += cc(x, i, k) * cc(y, k, i);
                    t3 += cc(i, k, x) * cc(i, k, y);
                }
            const double v = -0.5 * t1 - 0.5 * kil + 0.25 * t3;
            ric(x, y) = v;
            ric(y, x) = v;
        }
    RicciResult out;
    out.gauge = alg.gauge();
    out.ric_metric_frame = ric;
    double tr = 0;
    for (std::size_t i = 0; i < n; ++i)
        tr += ric(i, i);
    out.scalar_curvature = tr;
    out.einstein_constant = tr / static_cast<double>(n);
    double dev = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double d = ric(i, j) - (i == j ? out.einstein_constant : 0.0);
            dev += d * d;
        }
    out.deviation = std::sqrt(dev / static_cast<double>(n));
    // back to the algebra basis: x = F y, so Ric(x, x') = y^T ric y' with y = L_m^T x
    out.ric_basis = lm * ric * lmt;
    const Matrix<double> gt_inv = inverse(cholesky(g).transpose());
    out.ric = gt_inv.transpose() * out.ric_basis * gt_inv;
    return out;
}

struct EinsteinReport {
    bool is_einstein = false;
    double c = 0;
    double deviation = 0;
    double scalar_curvature = 0;
    std::string gauge;
};

/// Einstein iff the deviation of Ric from c (.,.) is at most tol.
template <class T>
EinsteinReport einstein_check(const MetricEndomorphism<T>& metric, double tol)
{
    const RicciResult r = ricci_left_invariant(metric);
    return EinsteinReport{r.deviation <= tol, r.einstein_constant, r.deviation, r.scalar_curvature, r.gauge};
}

} // namespace gometrics

#endif // GOMETRICS_RICCI_HPP
