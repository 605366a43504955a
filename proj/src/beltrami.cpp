#include "terza/beltrami.hpp"

#include <cmath>

#include <Eigen/LU>

#include "terza/error.hpp"

namespace terza {
namespace {

Jet3 germ(double value, double du, double dv, double duu, double duv, double dvv) {
    std::array<double, Jet3::kSize> c{};
    c[Jet3::index(0, 0)] = value;
    c[Jet3::index(1, 0)] = du;
    c[Jet3::index(0, 1)] = dv;
    c[Jet3::index(2, 0)] = duu;
    c[Jet3::index(1, 1)] = duv;
    c[Jet3::index(0, 2)] = dvv;
    return Jet3(c);
}

template <class Fn>
Vec3 per_component(Fn&& fn) {
    return {fn(0), fn(1), fn(2)};
}

}  // namespace

MetricJet metric_of_form1(const GeoFrame& frame) { return {frame.form1, frame.form1_u, frame.form1_v}; }
MetricJet metric_of_form3(const GeoFrame& frame) { return {frame.form3, frame.form3_u, frame.form3_v}; }

double metric_laplacian(const MetricJet& g, const Jet3& phi) {
    const Eigen::Matrix2d G = g.value.matrix();
    if (!(G(0, 0) > 0.0) || !(G.determinant() > 0.0)) throw MetricError("metric is not positive definite");
    const Eigen::Matrix2d Ginv = G.inverse();
    const Eigen::Matrix2d dG[2] = {g.du.matrix(), g.dv.matrix()};

    const Eigen::Vector2d grad(phi.du(), phi.dv());
    Eigen::Matrix2d hess;
    hess << phi.duu(), phi.duv(), phi.duv(), phi.dvv();

    // -(g^{ij} phi_ij + d_i(g^{ij}) phi_j + d_i(ln sqrt det g) g^{ij} phi_j),
    // with d_i g^{-1} = -g^{-1} (d_i g) g^{-1} and d_i ln sqrt det g = tr(g^{-1} d_i g) / 2.
    double acc = (Ginv.cwiseProduct(hess)).sum();
    const Eigen::Vector2d raised = Ginv * grad;
    for (int i = 0; i < 2; ++i) {
        const Eigen::Matrix2d dGinv = -Ginv * dG[i] * Ginv;
        const double dlog = 0.5 * (Ginv * dG[i]).trace();
        acc += dGinv.row(i).dot(grad) + dlog * raised(i);
    }
    return -acc;
}

Jet3 position_component(const GeoFrame& f, int i) {
    return germ(f.x(i), f.x_u(i), f.x_v(i), f.x_uu(i), f.x_uv(i), f.x_vv(i));
}

Jet3 normal_component(const GeoFrame& f, int i) {
    return germ(f.n(i), f.n_u(i), f.n_v(i), f.n_uu(i), f.n_uv(i), f.n_vv(i));
}

Vec3 delta_I_x(const GeoFrame& frame) {
    const MetricJet g = metric_of_form1(frame);
    return per_component([&](int i) { return metric_laplacian(g, position_component(frame, i)); });
}

Vec3 delta_III_x(const GeoFrame& frame) {
    const MetricJet g = metric_of_form3(frame);
    return per_component([&](int i) { return metric_laplacian(g, position_component(frame, i)); });
}

Vec3 delta_III_x_closed(const GeoFrame& frame) {
    const Eigen::Matrix2d G = frame.form3.matrix();
    if (!(G(0, 0) > 0.0) || !(G.determinant() > 0.0)) throw MetricError("third fundamental form is not positive definite");
    const Eigen::Vector2d coeff = G.inverse() * Eigen::Vector2d(frame.w_u, frame.w_v);
    return coeff(0) * frame.n_u + coeff(1) * frame.n_v - frame.w * frame.n;
}

Vec3 delta_III_gauss(const GeoFrame& frame) {
    const MetricJet g = metric_of_form3(frame);
    return per_component([&](int i) { return metric_laplacian(g, normal_component(frame, i)); });
}

TranslationOperatorData translation_MN(const SurfaceDef& def, double u, double v) {
    const Jet3 fj = profile_f(def, u).diff_u();  // f, exact through order 2
    const Jet3 hj = profile_h(def, v).diff_v();
    const Jet3 fs = fj.diff_u(), hs = hj.diff_v();

    TranslationOperatorData d;
    d.f = fj.value();
    d.f_s = fj.du();
    d.f_ss = fj.duu();
    d.h = hj.value();
    d.h_t = hj.dv();
    d.h_tt = hj.dvv();
    if (d.f_s == 0.0 || d.h_t == 0.0) throw ParabolicPointError("parabolic point: f_s or h_t vanishes");
    d.mu = 1.0 + d.f * d.f + d.h * d.h;

    d.M = (1.0 + d.f * d.f) * d.f_ss / (d.f_s * d.f_s * d.f_s) - 2.0 * d.f / d.f_s;
    d.N = (1.0 + d.h * d.h) * d.h_tt / (d.h_t * d.h_t * d.h_t) - 2.0 * d.h / d.h_t;

    const Jet3 p = (1.0 + fj * fj) / fs;
    const Jet3 q = (1.0 + hj * hj) / hs;
    d.r_M = p.du() + d.M * d.f_s;
    d.r_N = q.dv() + d.N * d.h_t;
    return d;
}

Vec3 delta_III_translation(const SurfaceDef& def, double u, double v, double kappa_min) {
    if (def.kind != SurfaceKind::Translation) throw InvalidParameter("delta_III_translation requires a translation surface");
    if (!def.domain.contains(u, v)) throw OutOfDomainError("point lies outside the domain of " + def.name);
    const TranslationOperatorData d = translation_MN(def, u, v);
    const double K = d.f_s * d.h_t / (d.mu * d.mu);
    if (!(std::abs(K) >= kappa_min)) throw ParabolicPointError("parabolic point: |K| below kappa_min");
    const double third = d.M * d.f + d.N * d.h - (1.0 + d.f * d.f) / d.f_s - (1.0 + d.h * d.h) / d.h_t;
    return Vec3(d.M, d.N, third) * d.mu;
}

}  // namespace terza
