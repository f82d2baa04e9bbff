#ifndef HALIN_VPG_HPP
#define HALIN_VPG_HPP

#include "halin/rooting.hpp"
#include "halin/shapes.hpp"

namespace halin {

// One-bend representation over the frame's relabeled leaves. With k leaves,
// depth d(v) and depth bound h, the shapes are, writing leaf j for order[j]:
//   leaf 0:    [3/2, k-1]  x [0, h-d+2]
//   leaf 1:    [1, 2]      x [1, h-d+2]
//   leaf k-1:  [k-1, k]    x [0, h-d+2]
//   leaf j:    [j, j+1]    x [1, h-d+2]
//   internal:  [min,max of x_lo over descendant leaves] x [h-d+1, h-d+2]
// All coordinates are half-integers (scale denominator 2).
Representation build_lvpg(const VpgFrame& frame);

// Wheel special case (single internal vertex): same coordinate rules applied
// to the hub-rooted frame.
Representation build_lvpg_wheel(const TucDecomposition& d);

}  // namespace halin

#endif
