#pragma once

#include <string>

#include "topo/forms.hpp"

namespace topo {

inline constexpr int kDefaultMaxRenderDepth = 8;

/*
 * Local topograph around the superbase vertex of f, expanded to the given
 * number of edge layers.  Nodes carry the three region values around each
 * vertex; edges carry their two flanking region values and the direction of
 * increase of the arithmetic progression (unoriented when constant).
 * Throws DepthExceeded past max_depth.
 */
std::string render_topograph_dot(const BinaryQuadraticForm& f, int depth,
                                 int max_depth = kDefaultMaxRenderDepth);

std::string render_topograph_ascii(const BinaryQuadraticForm& f, int depth,
                                   int max_depth = kDefaultMaxRenderDepth);

}  // namespace topo
