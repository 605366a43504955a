#pragma once

#include <array>
#include <functional>
#include <optional>

#include "terza/jet.hpp"
#include "terza/surface.hpp"

namespace terza {

// Central-difference estimates of all partials through order 3, in Jet3
// slot order. Second-order accurate in the step. Meant as a test oracle
// for the jet arithmetic; nothing in the production path uses it.
//
// Throws StencilError when the stencil box (radius 3 * step) leaves
// `domain`, or when the field cannot be evaluated on the stencil.
std::array<double, Jet3::kSize> fd_partials(const std::function<double(double, double)>& field,
                                            double u, double v, double step,
                                            const std::optional<Domain>& domain = std::nullopt);

}  // namespace terza
