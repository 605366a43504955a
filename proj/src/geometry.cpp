#include "terza/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "terza/error.hpp"

namespace terza {
namespace {

using JetVec = std::array<Jet3, 3>;

JetVec diff_u(const JetVec& a) { return {a[0].diff_u(), a[1].diff_u(), a[2].diff_u()}; }
JetVec diff_v(const JetVec& a) { return {a[0].diff_v(), a[1].diff_v(), a[2].diff_v()}; }

Jet3 dot(const JetVec& a, const JetVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

JetVec cross(const JetVec& a, const JetVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 partial(const JetVec& a, int i, int j) { return {a[0](i, j), a[1](i, j), a[2](i, j)}; }

// Value and first partials of three jets packed as symmetric-form triples.
void split(const Jet3& e11, const Jet3& e12, const Jet3& e22, SymForm& value, SymForm& du, SymForm& dv) {
    value = {e11.value(), e12.value(), e22.value()};
    du = {e11.du(), e12.du(), e22.du()};
    dv = {e11.dv(), e12.dv(), e22.dv()};
}

std::string at(double u, double v) {
    std::ostringstream os;
    os.precision(17);
    os << " at (" << u << ", " << v << ")";
    return os.str();
}

}  // namespace

GeoFrame frame_at(const SurfaceDef& def, double u, double v, double kappa_min) {
    GeoFrame fr;
    fr.u = u;
    fr.v = v;

    // X is exact through order 3, its first partials through 2, second through 1.
    const JetVec X = surface_jet(def, u, v);
    const JetVec Xu = diff_u(X), Xv = diff_v(X);
    const JetVec Xuu = diff_u(Xu), Xuv = diff_v(Xu), Xvv = diff_v(Xv);

    const JetVec N = cross(Xu, Xv);
    const Jet3 area2 = dot(N, N);
    if (!(std::sqrt(area2.value()) >= kMinChartArea))
        throw DegenerateChartError("degenerate chart: |x_u x x_v| vanishes" + at(u, v));
    const Jet3 inv_area = reciprocal(sqrt(area2));
    const JetVec n = {N[0] * inv_area, N[1] * inv_area, N[2] * inv_area};
    const JetVec nu = diff_u(n), nv = diff_v(n);

    fr.x = partial(X, 0, 0);
    fr.x_u = partial(X, 1, 0);
    fr.x_v = partial(X, 0, 1);
    fr.x_uu = partial(X, 2, 0);
    fr.x_uv = partial(X, 1, 1);
    fr.x_vv = partial(X, 0, 2);
    fr.n = partial(n, 0, 0);
    fr.n_u = partial(n, 1, 0);
    fr.n_v = partial(n, 0, 1);
    fr.n_uu = partial(n, 2, 0);
    fr.n_uv = partial(n, 1, 1);
    fr.n_vv = partial(n, 0, 2);

    const Jet3 g11 = dot(Xu, Xu), g12 = dot(Xu, Xv), g22 = dot(Xv, Xv);
    const Jet3 b11 = dot(Xuu, n), b12 = dot(Xuv, n), b22 = dot(Xvv, n);
    const Jet3 c11 = dot(nu, nu), c12 = dot(nu, nv), c22 = dot(nv, nv);

    split(g11, g12, g22, fr.form1, fr.form1_u, fr.form1_v);
    fr.form2 = {b11.value(), b12.value(), b22.value()};
    split(c11, c12, c22, fr.form3, fr.form3_u, fr.form3_v);

    const Jet3 det_g = g11 * g22 - g12 * g12;
    const Jet3 K = (b11 * b22 - b12 * b12) / det_g;
    const Jet3 H = (g11 * b22 - 2.0 * g12 * b12 + g22 * b11) / (2.0 * det_g);
    fr.K = K.value();
    fr.H = H.value();
    if (!(std::abs(fr.K) >= kappa_min) || K.value() == 0.0)
        throw ParabolicPointError("parabolic point: |K| = " + std::to_string(std::abs(fr.K)) + " below kappa_min" + at(u, v));

    const Jet3 w = 2.0 * H / K;
    fr.w = w.value();
    fr.w_u = w.du();
    fr.w_v = w.dv();

    const double disc = std::sqrt(std::max(fr.H * fr.H - fr.K, 0.0));
    fr.a = fr.H + disc;
    fr.c = fr.H - disc;
    return fr;
}

std::optional<std::string> regularity_guard(const GeoFrame& frame, double kappa_min) {
    const double det = frame.form1.det();
    if (!(det >= kMinMetricDet)) return "det(I) below " + std::to_string(kMinMetricDet);
    if (!(std::abs(frame.K) >= kappa_min)) return "|K| below kappa_min (parabolic point)";
    if (!std::isfinite(frame.w) || !std::isfinite(frame.w_u) || !std::isfinite(frame.w_v))
        return "non-finite curvature data";
    return std::nullopt;
}

Curvatures translation_curvatures(const SurfaceDef& def, double u, double v, double kappa_min) {
    if (def.kind != SurfaceKind::Translation)
        throw InvalidParameter("translation_curvatures requires a translation surface");
    if (!def.domain.contains(u, v)) throw OutOfDomainError("point lies outside the domain of " + def.name + at(u, v));
    const Jet3 F = profile_f(def, u), Hp = profile_h(def, v);
    const double f = F.du(), f_s = F.duu();
    const double h = Hp.dv(), h_t = Hp.dvv();
    const double mu = 1.0 + f * f + h * h;
    Curvatures out;
    out.K = f_s * h_t / (mu * mu);
    out.H = 0.5 * ((1.0 + f * f) * h_t + (1.0 + h * h) * f_s) / (mu * std::sqrt(mu));
    if (!(std::abs(out.K) >= kappa_min))
        throw ParabolicPointError("parabolic point: f_s h_t vanishes" + at(u, v));
    return out;
}

}  // namespace terza
