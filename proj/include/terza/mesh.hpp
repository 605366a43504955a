#pragma once

#include <ostream>

#include "terza/geometry.hpp"

namespace terza {

struct MeshStats {
    std::size_t vertices = 0;
    std::size_t triangles = 0;
    std::size_t vertices_without_curvature = 0;
};

// ASCII OBJ of the sampling grid. Each vertex line is preceded by a
// comment "# K=<K> H=<H> w=<2H/K>" (nan where the frame is not admissible);
// each grid quad is split into two triangles.
MeshStats write_obj(const SurfaceDef& def, int nu, int nv, std::ostream& out, double kappa_min = kDefaultKappaMin);

}  // namespace terza
