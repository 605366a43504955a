#pragma once

#include "terza/geometry.hpp"
#include "terza/jet.hpp"

namespace terza {

// A metric germ: coefficients at the base point with their first partials.
struct MetricJet {
    SymForm value, du, dv;
};

MetricJet metric_of_form1(const GeoFrame& frame);
MetricJet metric_of_form3(const GeoFrame& frame);

// Second Beltrami operator of the metric g applied to phi,
//
//   Delta phi = -(1 / sqrt(det g)) d_i (sqrt(det g) g^{ij} d_j phi),
//
// i.e. minus the divergence-form Laplacian, so that Delta^I x = -2H n.
// Uses only the first partials of g and partials of phi through order 2.
// Throws MetricError unless g is positive definite.
double metric_laplacian(const MetricJet& g, const Jet3& phi);

// Coordinate functions of x (resp. n) as jets exact through order 2.
Jet3 position_component(const GeoFrame& frame, int i);
Jet3 normal_component(const GeoFrame& frame, int i);

// Delta^I x, componentwise.
Vec3 delta_I_x(const GeoFrame& frame);

// Delta^III x, componentwise from the third-form metric.
Vec3 delta_III_x(const GeoFrame& frame);

// Delta^III x = grad^III(w) - w n with w = 2H/K. The gradient is pushed
// forward along the Gauss map: sum_j (c^{jk} d_k w) d_j n.
Vec3 delta_III_x_closed(const GeoFrame& frame);

// Delta^III n, componentwise. Equals 2n on every surface.
Vec3 delta_III_gauss(const GeoFrame& frame);

// Profile data of a translation surface at (u, v) and the auxiliary
// functions
//   M = (1 + f^2) f_ss / f_s^3 - 2 f / f_s,
//   N = (1 + h^2) h_tt / h_t^3 - 2 h / h_t.
// r_M, r_N are the residuals of d/du((1 + f^2)/f_s) + M f_s = 0 and its
// counterpart in v, with the derivative taken by jet arithmetic.
struct TranslationOperatorData {
    double f = 0.0, f_s = 0.0, f_ss = 0.0;
    double h = 0.0, h_t = 0.0, h_tt = 0.0;
    double mu = 0.0;
    double M = 0.0, N = 0.0;
    double r_M = 0.0, r_N = 0.0;
};

// Throws ParabolicPointError when f_s or h_t vanishes.
TranslationOperatorData translation_MN(const SurfaceDef& def, double u, double v);

// The specialized operator on the coordinates of a translation surface:
//   (M mu, N mu, (M f + N h - (1 + f^2)/f_s - (1 + h^2)/h_t) mu).
Vec3 delta_III_translation(const SurfaceDef& def, double u, double v, double kappa_min = kDefaultKappaMin);

}  // namespace terza
