#pragma once

#include <optional>
#include <string>

#include <Eigen/Core>

#include "terza/surface.hpp"

namespace terza {

using Vec3 = Eigen::Vector3d;

// Coefficients of a symmetric 2x2 form e11 du^2 + 2 e12 du dv + e22 dv^2.
struct SymForm {
    double e11 = 0.0, e12 = 0.0, e22 = 0.0;

    double det() const { return e11 * e22 - e12 * e12; }
    Eigen::Matrix2d matrix() const {
        Eigen::Matrix2d m;
        m << e11, e12, e12, e22;
        return m;
    }
};

inline constexpr double kDefaultKappaMin = 1e-8;
inline constexpr double kMinChartArea = 1e-12;   // |x_u x x_v| below this is degenerate
inline constexpr double kMinMetricDet = 1e-10;   // det(I) floor for admissibility

// Pointwise geometry at (u, v). The normal is (x_u x x_v) / |x_u x x_v| and
// the second form uses b_ij = x_ij . n.
struct GeoFrame {
    double u = 0.0, v = 0.0;

    Vec3 x, x_u, x_v, x_uu, x_uv, x_vv;
    Vec3 n, n_u, n_v, n_uu, n_uv, n_vv;

    SymForm form1, form1_u, form1_v;  // I and its partials
    SymForm form2;                    // II
    SymForm form3, form3_u, form3_v;  // III and its partials

    double K = 0.0;
    double H = 0.0;
    double w = 0.0;  // 2H / K
    double w_u = 0.0, w_v = 0.0;
    double a = 0.0, c = 0.0;  // principal curvatures, a >= c
};

// Throws DegenerateChartError when |x_u x x_v| < kMinChartArea and
// ParabolicPointError when |K| < kappa_min; expression domain errors and
// OutOfDomainError propagate.
GeoFrame frame_at(const SurfaceDef& def, double u, double v, double kappa_min = kDefaultKappaMin);

// Returns the first violated admissibility condition, or nullopt.
std::optional<std::string> regularity_guard(const GeoFrame& frame, double kappa_min = kDefaultKappaMin);

struct Curvatures {
    double K = 0.0;
    double H = 0.0;
};

// Curvatures of a translation surface from its profiles alone:
//   K = f_s h_t / mu^2,  2H = ((1 + f^2) h_t + (1 + h^2) f_s) / mu^(3/2),
// with f = df~/du, h = dh~/dv and mu = 1 + f^2 + h^2.
Curvatures translation_curvatures(const SurfaceDef& def, double u, double v, double kappa_min = kDefaultKappaMin);

}  // namespace terza
