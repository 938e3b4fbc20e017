#pragma once

// SVG 1.1 rendering of planar lattice polytopes, their pulling
// triangulations and normal fans.

#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric::cli {

struct SvgRequest {
  std::vector<Polytope> polytopes;  // each in the plane
  bool triangulation = false;
  bool fan = false;  // normal fan of the first polytope, drawn at the origin
  unsigned scale = 40;  // pixels per lattice unit
};

/// Throws InputError unless every polytope lives in the plane.
std::string render_svg(const SvgRequest& request);

}  // namespace toric::cli
