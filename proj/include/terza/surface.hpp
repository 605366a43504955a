#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "terza/expr.hpp"
#include "terza/jet.hpp"

namespace terza {

// Closed parameter rectangle [u0, u1] x [v0, v1].
struct Domain {
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;

    bool contains(double u, double v) const { return u >= u0 && u <= u1 && v >= v0 && v <= v1; }
    bool nondegenerate() const { return u0 < u1 && v0 < v1; }
};

enum class SurfaceKind { Parametric, Translation };

// A parametric surface. Translation surfaces store two profiles, f in u and
// h in v, and are evaluated as (u, v, f(u) + h(v)).
struct SurfaceDef {
    SurfaceKind kind = SurfaceKind::Parametric;
    std::string name;
    std::array<Expr, 3> xyz;  // parametric only
    Expr f;                   // translation only
    Expr h;                   // translation only
    Domain domain;
};

SurfaceDef make_parametric(std::string name, Expr x, Expr y, Expr z, Domain domain);
// Throws InvalidParameter if f mentions v, h mentions u, or the domain is empty.
SurfaceDef make_translation(std::string name, Expr f, Expr h, Domain domain);

// Constants of the minimal translation surface
//   z = c - ln(cos(a1 u + a2)) / a1 + ln(cos(-a1 v + b2)) / a1.
struct ScherkParams {
    double a1 = 1.0;
    double a2 = 0.0;
    double b2 = 0.0;
    double c = 0.0;
};

// Cosine floor that bounds the default Scherk domain.
inline constexpr double kScherkCosMargin = 0.05;

// Throws InvalidParameter("a1 must be nonzero") for a1 == 0. The domain is
// the largest rectangle centred on the cosine maxima on which both cosines
// stay above kScherkCosMargin.
SurfaceDef scherk(const ScherkParams& p);

// Catalog lookup. Names: sphere(r), catenoid, helicoid(pitch),
// ellipsoid(p,q,r), elliptic-paraboloid (alias paraboloid), torus(R,r),
// monkey-saddle, scherk(a1,a2,b2,c). Missing trailing parameters take
// defaults; extra or out-of-range ones raise InvalidParameter.
SurfaceDef builtin(std::string_view name, std::span<const double> params = {});

struct CatalogEntry {
    std::string name;
    std::string parameters;
    std::string description;
};
std::vector<CatalogEntry> catalog();

// Parses "name[:p1,p2,...]".
SurfaceDef builtin_from_spec(std::string_view spec);

// Key = value surface-definition format. Throws FormatError with line numbers.
SurfaceDef load_surface(std::string_view text);
std::string surface_to_text(const SurfaceDef& def);

// Position jets (x1, x2, x3) at (u, v). Throws OutOfDomainError outside the
// domain and propagates expression domain errors.
std::array<Jet3, 3> surface_jet(const SurfaceDef& def, double u, double v);

// Jet of the profile f(u) (resp. h(v)) of a translation surface.
Jet3 profile_f(const SurfaceDef& def, double u);
Jet3 profile_h(const SurfaceDef& def, double v);

}  // namespace terza
