#ifndef HALIN_EPG_HPP
#define HALIN_EPG_HPP

#include "halin/rooting.hpp"
#include "halin/shapes.hpp"

namespace halin {

// Two-bend C representation over the frame's relabeled leaves, eps = 1/4.
// Writing leaf i for order[i], d(v) for depth and h for the depth bound:
//   leaf 0:        C(0,     1+e,     k-1+e, 0, h+1)
//   leaf k-1:      C(k-1,   k+e,     k-1+e, 0, h+1)
//   leaf i:        C(i,     i+1+e,   i+3e,  0, h-d+1)
//   internal v:    C(min i + 2e, max i + 3e, min i + 3e, h-d, h-d+1)
//                  (min/max over descendant-leaf indices i)
//   tail parent (not root): C(k-1+2e, k-1+3e, k-1+3e, 0, h-d+1)
//   root:          C(2e, k-1+3e, 1, h, h+1), or with top arm to k-1+e when
//                  the root is itself the tail parent.
// Scale denominator 4.
Representation build_c_epg(const EpgFrame& frame);

// Two-bend S representation, eps = 1/(2h):
//   leaf 0:        S(-e,     0,   k-1+3e, 0, h+1)
//   leaf k-1:      S(k-2-e,  k-1, k-1+e,  0, h+1)
//   leaf i:        S(i-1-e,  i,   i+1-e,  0, h-d+1)
//   internal v:    S(min i, max i + (h-d)e, max i + 1 - e, h-d, h-d+1)
//   tail parent (not root): S(k-1-e, k-1+e, k-1+2e, 0, h-d+1)
//   root:          S(e, k-1-e, k-1+e, h, h+1) when the root is the tail
//                  parent, else S(e, k-1+he, k-1+(h+1)e, h, h+1) with the
//                  first leaf's top arm stretched to k-1+(h+1)e so the two
//                  still meet (the riser offsets of the last leaf's deeper
//                  ancestors grow with h, so a fixed 2e arm falls short).
// Scale denominator 2h. DegenerateHeightError when h = 0 (unreachable for a
// valid frame: the leaves sit at depth >= 1).
Representation build_s_epg(const EpgFrame& frame);

// Wheel special case, routed through the hub-rooted frame.
Representation build_epg_wheel(const TucDecomposition& d, RepKind kind);

}  // namespace halin

#endif
