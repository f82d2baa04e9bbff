#ifndef HALIN_ROOTING_HPP
#define HALIN_ROOTING_HPP

#include <vector>

#include "halin/tuc.hpp"

namespace halin {

// Rim index i and meeting vertex of the base leaf pair (c_i, c_{i+1}):
// the consecutive pair whose tree paths meet closest to the leaves. Between
// the pair, every vertex on the connecting tree path except the meeting
// vertex has degree two.
struct BasePair {
    int index;           // i, into d.cycle
    int meeting_vertex;  // top of the path c_i..c_{i+1}, the frame root
};

// Picks the base pair under an auxiliary root (lowest-id internal vertex),
// maximizing the meeting vertex's depth, smallest index on ties. Throws
// IsWheelError when there is only one internal vertex.
BasePair find_base_pair(const TucDecomposition& d);

// Frame for the one-bend construction: leaves relabeled so the base pair
// comes first, tree rerooted at the meeting vertex. Guarantees, checked on
// construction:
//  - every vertex strictly between order[0] (or order[1]) and the root has
//    exactly one descendant leaf;
//  - every descendant-leaf set is a non-wrapping window of `order`.
struct VpgFrame {
    std::vector<int> order;  // k leaf ids, a rim rotation
    int root;
    RootedTree tree;
};

// Frame for the two-bend constructions. The leaves are relabeled, walking
// the rim away from whichever end of the base pair has the degree-two
// neighbor, and the tree is rerooted at the parent of order[0]. Guarantees,
// checked on construction:
//  - root is the parent of order[0];
//  - the parent of order[k-1] has degree two or is the root itself;
//  - every descendant-leaf set is a non-wrapping window of `order`.
struct EpgFrame {
    std::vector<int> order;  // k leaf ids, a rim rotation or reflection
    int root;
    int tail_parent;         // parent of order[k-1]
    RootedTree tree;

    bool tail_parent_is_root() const { return tail_parent == root; }
};

VpgFrame make_vpg_frame(const TucDecomposition& d);  // IsWheelError on wheels
EpgFrame make_epg_frame(const TucDecomposition& d);  // IsWheelError on wheels

// Wheel counterparts: root at the hub, leaf order the rim as-is (VPG) or
// reflected (EPG). The same frame guarantees hold and the generic builders
// apply unchanged.
VpgFrame make_wheel_vpg_frame(const TucDecomposition& d);
EpgFrame make_wheel_epg_frame(const TucDecomposition& d);

}  // namespace halin

#endif
