#pragma once

// Independent coordinate-model enumerator for the flat (3,3,3) signature.
//
// Works directly on the triangular lattice with exact rational coordinates
// instead of the abstract tessellation: a point (x, y) stands for the plane
// point (x, y*sqrt(3)), so every vertex, arc endpoint, and face center is
// rational.  Areas come from ray casting rather than flood fill.  The two
// enumerators share only the walk encoding, which is what makes agreement
// between them meaningful.

#include <vector>

#include "qmirror/enumerate.hpp"

namespace qmirror {

std::vector<Polygon> enumerate_euclid(const EnumOptions& opt);

}  // namespace qmirror
