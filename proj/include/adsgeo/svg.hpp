#pragma once

#include <string>

#include "adsgeo/invisible_domain.hpp"

namespace adsgeo {

/// Two-panel SVG picture of E(lambda) for n = 2. Left: the slice of the
/// conformal cylinder over the meridian through `meridian_angle`, with the
/// band between f- and f+. Right: the boundary torus unrolled to
/// (phi, theta) with the limit-set points and the envelope curves.
/// Output depends only on the arguments.
std::string render_domain_svg(const AchronalSample& lambda, double meridian_angle = 0.0, int samples = 181);

}  // namespace adsgeo
