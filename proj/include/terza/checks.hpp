#pragma once

#include <optional>
#include <string>
#include <vector>

#include "terza/geometry.hpp"

namespace terza {

enum class Suite { Forms, DeltaI, R11, Eq4, GaussMap };

std::string_view suite_name(Suite s);
// Accepts forms, deltaI, r11, eq4, gaussmap; "all" expands to every suite.
std::vector<Suite> parse_suites(std::string_view name);

// |a - b| / (1 + max(|a|, |b|)).
double mixed_error(const Vec3& a, const Vec3& b);

// max |III - (2H II - K I)| over coefficients, over the largest of the three
// forms' coefficients.
double form_identity_error(const GeoFrame& fr);

struct CheckLine {
    std::string suite;
    std::string metric;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CheckOptions {
    std::optional<double> tol_rel;  // replaces every metric's default bound
    double tol_abs = 0.0;           // added to every bound
    double kappa_min = kDefaultKappaMin;
};

struct CheckReport {
    std::string surface;
    int nu = 0, nv = 0;
    std::size_t points = 0;
    std::size_t rejected = 0;
    std::vector<CheckLine> lines;
    std::optional<double> gauss_eigenvalue;
    bool pass = true;
};

// Sweeps the admissible points of the grid and evaluates every requested
// suite. The eq4 suite requires a translation surface (InvalidParameter
// otherwise); InsufficientSamplesError when no point is admissible.
CheckReport run_checks(const SurfaceDef& def, int nu, int nv, const std::vector<Suite>& suites,
                       const CheckOptions& opt = {});

}  // namespace terza
