#include "terza/finite_diff.hpp"

#include "terza/error.hpp"
#include "terza/surface.hpp"

namespace terza {

std::array<double, Jet3::kSize> fd_partials(const std::function<double(double, double)>& field,
                                            double u, double v, double step,
                                            const std::optional<Domain>& domain) {
    if (!(step > 0.0)) throw StencilError("finite-difference step must be positive");
    const double r = 3.0 * step;
    if (domain && (u - r < domain->u0 || u + r > domain->u1 || v - r < domain->v0 || v + r > domain->v1))
        throw StencilError("finite-difference stencil leaves the domain");

    auto f = [&](int i, int j) {
        try {
            return field(u + i * step, v + j * step);
        } catch (const Error& e) {
            throw StencilError(std::string("stencil evaluation failed: ") + e.what());
        }
    };

    const double h = step, h2 = h * h, h3 = h2 * h;
    const double f00 = f(0, 0);
    const double fp0 = f(1, 0), fm0 = f(-1, 0), f0p = f(0, 1), f0m = f(0, -1);
    const double fpp = f(1, 1), fpm = f(1, -1), fmp = f(-1, 1), fmm = f(-1, -1);

    std::array<double, Jet3::kSize> d{};
    d[Jet3::index(0, 0)] = f00;
    d[Jet3::index(1, 0)] = (fp0 - fm0) / (2 * h);
    d[Jet3::index(0, 1)] = (f0p - f0m) / (2 * h);
    d[Jet3::index(2, 0)] = (fp0 - 2 * f00 + fm0) / h2;
    d[Jet3::index(1, 1)] = (fpp - fpm - fmp + fmm) / (4 * h2);
    d[Jet3::index(0, 2)] = (f0p - 2 * f00 + f0m) / h2;
    d[Jet3::index(3, 0)] = (f(2, 0) - 2 * fp0 + 2 * fm0 - f(-2, 0)) / (2 * h3);
    d[Jet3::index(0, 3)] = (f(0, 2) - 2 * f0p + 2 * f0m - f(0, -2)) / (2 * h3);
    // D_uu applied to the central v-difference, and symmetrically.
    d[Jet3::index(2, 1)] = ((fpp - 2 * f0p + fmp) - (fpm - 2 * f0m + fmm)) / (2 * h3);
    d[Jet3::index(1, 2)] = ((fpp - 2 * fp0 + fpm) - (fmp - 2 * fm0 + fmm)) / (2 * h3);
    return d;
}

}  // namespace terza
