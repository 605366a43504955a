#include "terza/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "terza/beltrami.hpp"
#include "terza/error.hpp"

namespace terza {
namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;

bool finite(const Vec3& a) { return a.allFinite(); }

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Satisfies: return "satisfies";
        case Verdict::TypeOne: return "type_one";
        case Verdict::Fails: return "fails";
    }
    return "fails";
}

std::vector<std::pair<double, double>> grid_points(const Domain& domain, int nu, int nv) {
    if (nu < 2 || nv < 2) throw InvalidParameter("grid needs at least 2 points per direction");
    const double du = domain.u1 - domain.u0, dv = domain.v1 - domain.v0;
    const double u0 = domain.u0 + 0.01 * du, u1 = domain.u1 - 0.01 * du;
    const double v0 = domain.v0 + 0.01 * dv, v1 = domain.v1 - 0.01 * dv;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i) {
        const double u = u0 + (u1 - u0) * i / (nu - 1);
        for (int j = 0; j < nv; ++j) pts.emplace_back(u, v0 + (v1 - v0) * j / (nv - 1));
    }
    return pts;
}

GridSample sample_grid(const SurfaceDef& def, int nu, int nv, double kappa_min) {
    GridSample s;
    s.surface = def.name;
    s.nu = nu;
    s.nv = nv;
    s.domain = def.domain;
    for (const auto& [u, v] : grid_points(def.domain, nu, nv)) {
        try {
            const GeoFrame fr = frame_at(def, u, v, kappa_min);
            if (auto reason = regularity_guard(fr, kappa_min)) {
                s.excluded.push_back({u, v, *reason});
                continue;
            }
            const Vec3 d = delta_III_x(fr);
            if (!finite(d) || !finite(fr.x)) {
                s.excluded.push_back({u, v, "non-finite operator value"});
                continue;
            }
            s.points.push_back({u, v, fr.x, d, fr.H});
        } catch (const Error& e) {
            s.excluded.push_back({u, v, e.what()});
        }
    }
    if (s.points.size() < kMinFitPoints)
        throw InsufficientSamplesError("only " + std::to_string(s.points.size()) + " admissible points on " + def.name +
                                       " (need " + std::to_string(kMinFitPoints) + ")");
    return s;
}

double squared_residual(const GridSample& sample, const Eigen::Matrix3d& lambda) {
    double acc = 0.0;
    for (const auto& p : sample.points) acc += (p.delta - lambda * p.x).squaredNorm();
    return acc;
}

LambdaFit fit_lambda(const GridSample& sample, const FitTolerances& tol) {
    const auto n = static_cast<Eigen::Index>(sample.points.size());
    if (static_cast<std::size_t>(n) < kMinFitPoints)
        throw InsufficientSamplesError("fit needs at least " + std::to_string(kMinFitPoints) + " points");

    RowMatrix X(n, 3), D(n, 3);
    for (Eigen::Index r = 0; r < n; ++r) {
        const auto& p = sample.points[static_cast<std::size_t>(r)];
        if (!finite(p.x) || !finite(p.delta)) throw NonFiniteError("non-finite sample value");
        X.row(r) = p.x.transpose();
        D.row(r) = p.delta.transpose();
    }

    LambdaFit fit;
    // D = X Lambda^T; each column of Lambda^T is one row of Lambda.
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(X);
    fit.lambda = cod.solve(Eigen::MatrixXd(D)).transpose();

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(X);
    const auto& sv = svd.singularValues();
    fit.design_condition = sv(2) > 0.0 ? sv(0) / sv(2) : std::numeric_limits<double>::infinity();
    fit.ill_conditioned = !(fit.design_condition <= tol.max_condition);

    const double inv_n = 1.0 / static_cast<double>(n);
    fit.residual_abs_rms = std::sqrt(squared_residual(sample, fit.lambda) * inv_n);
    fit.rms_delta = std::sqrt(D.squaredNorm() * inv_n);
    fit.rms_x = std::sqrt(X.squaredNorm() * inv_n);
    fit.residual_rel = fit.residual_abs_rms / std::max(fit.rms_delta, tol.floor);
    fit.threshold = tol.abs_coeff * (1.0 + fit.rms_x) + tol.rel * fit.rms_delta;

    if (!(fit.residual_abs_rms <= fit.threshold)) {
        fit.verdict = Verdict::Fails;
        return fit;
    }
    fit.verdict = Verdict::Satisfies;
    // A nonzero multiple of the identity is type 1; Lambda ~ 0 stays "satisfies".
    const double lambda = fit.lambda.trace() / 3.0;
    const double spread = (fit.lambda - lambda * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (spread <= tol.tau_iso * (1.0 + std::abs(lambda)) && std::abs(lambda) > tol.tau_iso) {
        fit.verdict = Verdict::TypeOne;
        fit.eigenvalue = lambda;
    }
    return fit;
}

double fit_scalar_eigenvalue(std::span<const Vec3> values, std::span<const Vec3> targets) {
    if (values.size() != targets.size() || values.empty())
        throw InvalidParameter("scalar eigenvalue fit needs matching, non-empty inputs");
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        num += values[k].dot(targets[k]);
        den += values[k].squaredNorm();
    }
    if (!(den > 0.0)) throw InvalidParameter("scalar eigenvalue fit on all-zero values");
    return num / den;
}

double minimality_residual(const SurfaceDef& def, std::span<const std::pair<double, double>> points) {
    if (def.kind != SurfaceKind::Translation) throw InvalidParameter("minimality residual requires a translation surface");
    if (points.empty()) throw InvalidParameter("minimality residual needs at least one point");
    double acc = 0.0;
    for (const auto& [u, v] : points) {
        const Jet3 f = profile_f(def, u), h = profile_h(def, v);
        const double f_s = f.duu(), h_t = h.dvv();
        if (f_s == 0.0 || h_t == 0.0) throw ParabolicPointError("parabolic point: f_s or h_t vanishes");
        const double r = (1.0 + f.du() * f.du()) / f_s + (1.0 + h.dv() * h.dv()) / h_t;
        acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(points.size()));
}

double minimality_residual(const SurfaceDef& def, const GridSample& sample) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(sample.points.size());
    for (const auto& p : sample.points) pts.emplace_back(p.u, p.v);
    return minimality_residual(def, pts);
}

ClassifyReport classify(const SurfaceDef& def, int nu, int nv, const FitTolerances& tol) {
    const GridSample sample = sample_grid(def, nu, nv, tol.kappa_min);
    ClassifyReport rep;
    rep.surface = def.name;
    rep.translation = def.kind == SurfaceKind::Translation;
    rep.nu = nu;
    rep.nv = nv;
    rep.included = sample.points.size();
    rep.excluded = sample.excluded.size();
    rep.fit = fit_lambda(sample, tol);
    rep.tolerances = tol;

    double h2 = 0.0;
    for (const auto& p : sample.points) h2 += p.H * p.H;
    rep.mean_curvature_rms = std::sqrt(h2 / static_cast<double>(sample.points.size()));
    if (rep.translation) {
        rep.minimality_residual = minimality_residual(def, sample);
        rep.minimal = *rep.minimality_residual <= tol.minimal;
    } else {
        rep.minimal = rep.mean_curvature_rms <= tol.minimal;
    }
    return rep;
}

}  // namespace terza
