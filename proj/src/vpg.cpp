#include "halin/vpg.hpp"

#include <algorithm>

namespace halin {

Representation build_lvpg(const VpgFrame& frame) {
    const RootedTree& t = frame.tree;
    const int k = static_cast<int>(frame.order.size());
    const int n = static_cast<int>(t.parent.size());
    if (k < 3) throw Error("cycle too short for the one-bend construction");
    const int h = t.max_depth;

    auto leaf_x_lo = [&](int j) -> Rat {
        if (j == 0) return Rat(3, 2);
        if (j == 1) return Rat(1);
        return Rat(j);  // covers j == k-1 as well
    };
    auto leaf_x_hi = [&](int j) -> Rat {
        if (j == 0) return Rat(k - 1);
        if (j == 1) return Rat(2);
        if (j == k - 1) return Rat(k);
        return Rat(j + 1);
    };

    Representation rep;
    rep.kind = RepKind::VpgL;
    rep.scale_den = 2;

    for (int v = 0; v < n; ++v) {
        LShape s;
        if (t.is_leaf(v)) {
            int j = t.leaf_pos[v];
            s.x_lo = leaf_x_lo(j);
            s.x_hi = leaf_x_hi(j);
            s.y_lo = (j == 0 || j == k - 1) ? Rat(0) : Rat(1);
            s.y_hi = Rat(h - t.depth[v] + 2);
        } else {
            auto [start, len] = t.leaf_interval[v];
            Rat lo = leaf_x_lo(start), hi = lo;
            for (int j = start + 1; j < start + len; ++j) {
                Rat x = leaf_x_lo(j % k);
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
            s.x_lo = lo;
            s.x_hi = hi;
            s.y_lo = Rat(h - t.depth[v] + 1);
            s.y_hi = Rat(h - t.depth[v] + 2);
        }
        check_invariants(s);
        rep.shapes.emplace(v, s);
    }
    return rep;
}

Representation build_lvpg_wheel(const TucDecomposition& d) {
    return build_lvpg(make_wheel_vpg_frame(d));
}

}  // namespace halin
