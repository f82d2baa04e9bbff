#include "halin/epg.hpp"

#include <algorithm>

namespace halin {

namespace {

// Smallest and largest descendant-leaf index of an internal vertex. The
// frame guarantees a non-wrapping window, so this is just its two ends.
std::pair<int, int> leaf_index_range(const RootedTree& t, int v) {
    auto [start, len] = t.leaf_interval[v];
    return {start, start + len - 1};
}

}  // namespace

Representation build_c_epg(const EpgFrame& frame) {
    const RootedTree& t = frame.tree;
    const int k = static_cast<int>(frame.order.size());
    const int n = static_cast<int>(t.parent.size());
    if (k < 3) throw Error("cycle too short for the two-bend construction");
    const int h = t.max_depth;
    const Rat e(1, 4);

    Representation rep;
    rep.kind = RepKind::EpgC;
    rep.scale_den = 4;

    for (int v = 0; v < n; ++v) {
        CShape s;
        if (t.is_leaf(v)) {
            int i = t.leaf_pos[v];
            if (i == 0) {
                s = {Rat(0), 1 + e, (k - 1) + e, Rat(0), Rat(h + 1)};
            } else if (i == k - 1) {
                s = {Rat(k - 1), k + e, (k - 1) + e, Rat(0), Rat(h + 1)};
            } else {
                s = {Rat(i), (i + 1) + e, i + 3 * e, Rat(0), Rat(h - t.depth[v] + 1)};
            }
        } else if (v == frame.root) {
            Rat top = frame.tail_parent_is_root() ? (k - 1) + e : Rat(1);
            s = {2 * e, (k - 1) + 3 * e, top, Rat(h), Rat(h + 1)};
        } else if (v == frame.tail_parent) {
            s = {(k - 1) + 2 * e, (k - 1) + 3 * e, (k - 1) + 3 * e, Rat(0),
                 Rat(h - t.depth[v] + 1)};
        } else {
            auto [imin, imax] = leaf_index_range(t, v);
            s = {imin + 2 * e, imax + 3 * e, imin + 3 * e, Rat(h - t.depth[v]),
                 Rat(h - t.depth[v] + 1)};
        }
        check_invariants(s);
        rep.shapes.emplace(v, s);
    }
    return rep;
}

Representation build_s_epg(const EpgFrame& frame) {
    const RootedTree& t = frame.tree;
    const int k = static_cast<int>(frame.order.size());
    const int n = static_cast<int>(t.parent.size());
    if (k < 3) throw Error("cycle too short for the two-bend construction");
    const int h = t.max_depth;
    if (h < 1) throw DegenerateHeightError("step construction needs depth bound >= 1");
    const Rat e(1, 2 * h);

    Representation rep;
    rep.kind = RepKind::EpgS;
    rep.scale_den = 2 * h;

    // When the tail parent is a separate vertex, an ancestor of the last leaf
    // may sit strictly between it and the root; such a vertex's riser lands at
    // (k-1) + (h - depth)*e, so the root's bottom arm has to run out to
    // (k-1) + h*e to reach every child. At h = 2 that is the familiar
    // (k-1) + 2e, but fixing the offset at two steps breaks deeper trees.
    // The first leaf's top arm is stretched to match the root's.
    const Rat root_mid = (k - 1) + h * e;

    for (int v = 0; v < n; ++v) {
        SShape s;
        if (t.is_leaf(v)) {
            int i = t.leaf_pos[v];
            if (i == 0) {
                Rat right = frame.tail_parent_is_root() ? (k - 1) + 3 * e : root_mid + e;
                s = {-e, Rat(0), right, Rat(0), Rat(h + 1)};
            } else if (i == k - 1) {
                s = {(k - 2) - e, Rat(k - 1), (k - 1) + e, Rat(0), Rat(h + 1)};
            } else {
                s = {(i - 1) - e, Rat(i), (i + 1) - e, Rat(0), Rat(h - t.depth[v] + 1)};
            }
        } else if (v == frame.root) {
            if (frame.tail_parent_is_root())
                s = {e, (k - 1) - e, (k - 1) + e, Rat(h), Rat(h + 1)};
            else
                s = {e, root_mid, root_mid + e, Rat(h), Rat(h + 1)};
        } else if (v == frame.tail_parent) {
            s = {(k - 1) - e, (k - 1) + e, (k - 1) + 2 * e, Rat(0), Rat(h - t.depth[v] + 1)};
        } else {
            auto [imin, imax] = leaf_index_range(t, v);
            int lift = h - t.depth[v];
            s = {Rat(imin), imax + lift * e, imax + 1 - e, Rat(lift), Rat(lift + 1)};
        }
        check_invariants(s);
        rep.shapes.emplace(v, s);
    }
    return rep;
}

Representation build_epg_wheel(const TucDecomposition& d, RepKind kind) {
    EpgFrame frame = make_wheel_epg_frame(d);
    if (kind == RepKind::EpgC) return build_c_epg(frame);
    if (kind == RepKind::EpgS) return build_s_epg(frame);
    throw Error("wheel EPG builder expects an EPG kind");
}

}  // namespace halin
