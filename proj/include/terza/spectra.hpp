#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "terza/geometry.hpp"

namespace terza {

// Thresholds for fitting Delta^III x = Lambda x.
struct FitTolerances {
    double abs_coeff = 1e-7;      // eps_abs = abs_coeff * (1 + RMS|x|)
    double rel = 1e-5;            // eps_rel
    double tau_iso = 1e-4;        // distance of Lambda from a scalar matrix
    double floor = 1e-12;         // denominator floor of residual_rel
    double kappa_min = kDefaultKappaMin;
    double max_condition = 1e8;   // design matrices above this are ill-conditioned
    double minimal = 1e-8;        // minimality flag threshold
};

struct SamplePoint {
    double u = 0.0, v = 0.0;
    Vec3 x;
    Vec3 delta;  // Delta^III x
    double H = 0.0;
};

struct ExcludedPoint {
    double u = 0.0, v = 0.0;
    std::string reason;
};

struct GridSample {
    std::string surface;
    int nu = 0, nv = 0;
    Domain domain;
    std::vector<SamplePoint> points;
    std::vector<ExcludedPoint> excluded;
};

inline constexpr std::size_t kMinFitPoints = 9;

// Uniform nu x nv grid over the domain shrunk inward by 1% of its extent on
// each side, in row-major order (u outer, v inner).
std::vector<std::pair<double, double>> grid_points(const Domain& domain, int nu, int nv);

// Evaluates frame_at + delta_III_x on the grid. Points failing any guard
// are recorded with a reason. Throws InvalidParameter for nu or nv < 2 and
// InsufficientSamplesError when fewer than kMinFitPoints are admissible.
GridSample sample_grid(const SurfaceDef& def, int nu, int nv, double kappa_min = kDefaultKappaMin);

enum class Verdict { Satisfies, TypeOne, Fails };

struct LambdaFit {
    Eigen::Matrix3d lambda = Eigen::Matrix3d::Zero();
    double residual_abs_rms = 0.0;
    double residual_rel = 0.0;
    double rms_x = 0.0;
    double rms_delta = 0.0;
    double design_condition = 0.0;
    bool ill_conditioned = false;
    double threshold = 0.0;  // residual_abs_rms bound used for the verdict
    Verdict verdict = Verdict::Fails;
    std::optional<double> eigenvalue;  // set for TypeOne
};

// Least-squares Lambda minimizing sum |delta - Lambda x|^2 over the sample,
// minimum-norm when the positions do not span R^3.
LambdaFit fit_lambda(const GridSample& sample, const FitTolerances& tol = {});

// Sum of squared residuals of a given Lambda on the sample.
double squared_residual(const GridSample& sample, const Eigen::Matrix3d& lambda);

// lambda minimizing sum |target - lambda value|^2.
double fit_scalar_eigenvalue(std::span<const Vec3> values, std::span<const Vec3> targets);

// RMS of (1 + f^2)/f_s + (1 + h^2)/h_t over the points (translation only).
double minimality_residual(const SurfaceDef& def, std::span<const std::pair<double, double>> points);
double minimality_residual(const SurfaceDef& def, const GridSample& sample);

struct ClassifyReport {
    std::string surface;
    bool translation = false;
    int nu = 0, nv = 0;
    std::size_t included = 0, excluded = 0;
    LambdaFit fit;
    std::optional<double> minimality_residual;
    double mean_curvature_rms = 0.0;
    bool minimal = false;
    FitTolerances tolerances;
};

ClassifyReport classify(const SurfaceDef& def, int nu, int nv, const FitTolerances& tol = {});

std::string_view verdict_name(Verdict v);

}  // namespace terza
