#include "terza/mesh.hpp"

#include <string>

#include "terza/error.hpp"
#include "terza/geometry.hpp"
#include "terza/spectra.hpp"

namespace terza {

MeshStats write_obj(const SurfaceDef& def, int nu, int nv, std::ostream& out, double kappa_min) {
    const auto pts = grid_points(def.domain, nu, nv);
    MeshStats stats;
    std::string buf;
    buf += "# " + def.name + " " + std::to_string(nu) + "x" + std::to_string(nv) + " kappa_min=" +
           format_number(kappa_min) + "\n";
    for (const auto& [u, v] : pts) {
        const auto X = surface_jet(def, u, v);
        std::string k = "nan", h = "nan", w = "nan";
        try {
            const GeoFrame fr = frame_at(def, u, v, kappa_min);
            k = format_number(fr.K);
            h = format_number(fr.H);
            w = format_number(fr.w);
        } catch (const Error&) {
            ++stats.vertices_without_curvature;
        }
        buf += "# K=" + k + " H=" + h + " w=" + w + "\n";
        buf += "v " + format_number(X[0].value()) + " " + format_number(X[1].value()) + " " +
               format_number(X[2].value()) + "\n";
        ++stats.vertices;
    }
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j + 1 < nv; ++j) {
            const int a = i * nv + j + 1, b = (i + 1) * nv + j + 1;
            const int c = a + 1, d = b + 1;
            buf += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(d) + "\n";
            buf += "f " + std::to_string(a) + " " + std::to_string(d) + " " + std::to_string(c) + "\n";
            stats.triangles += 2;
        }
    }
    out << buf;
    return stats;
}

}  // namespace terza
