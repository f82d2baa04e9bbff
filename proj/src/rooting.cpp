#include "halin/rooting.hpp"

#include <algorithm>

namespace halin {

namespace {

int lowest_internal(const TucDecomposition& d) {
    for (int v = 0; v < d.graph.size(); ++v)
        if (d.is_internal[v]) return v;
    throw Error("decomposition has no internal vertex");
}

// The unique tree neighbor of a leaf.
int leaf_parent(const TucDecomposition& d, int leaf) {
    if (d.tree_adj[leaf].size() != 1) throw Error("expected a tree leaf");
    return d.tree_adj[leaf][0];
}

// Vertices strictly between the two leaves on the tree path joining them.
std::vector<int> path_interior(const RootedTree& t, int u, int v) {
    auto [top, top_depth] = lca(t, u, v);
    std::vector<int> out;
    for (int w = t.parent[u]; w != -1 && t.depth[w] >= top_depth; w = t.parent[w]) out.push_back(w);
    for (int w = t.parent[v]; w != -1 && t.depth[w] > top_depth; w = t.parent[w]) out.push_back(w);
    return out;
}

void validate_vpg_frame(const TucDecomposition& d, const VpgFrame& f) {
    if (!f.tree.leaf_intervals_valid)
        throw Error("frame invariant violated: leaf sets not cyclically consecutive");
    if (!leaf_sets_consecutive(d, f.tree, /*cyclic=*/false))
        throw Error("frame invariant violated: leaf sets wrap the relabeled order");
    for (int j : {0, 1}) {
        for (int w = f.tree.parent[f.order[j]]; w != f.root; w = f.tree.parent[w]) {
            if (f.tree.leaf_interval[w].second != 1)
                throw Error("frame invariant violated: vertex between base leaf and root has " +
                            std::to_string(f.tree.leaf_interval[w].second) + " descendant leaves");
        }
    }
}

void validate_epg_frame(const TucDecomposition& d, const EpgFrame& f) {
    if (!f.tree.leaf_intervals_valid)
        throw Error("frame invariant violated: leaf sets not cyclically consecutive");
    if (!leaf_sets_consecutive(d, f.tree, /*cyclic=*/false))
        throw Error("frame invariant violated: leaf sets wrap the relabeled order");
    if (f.tree.parent[f.order[0]] != f.root)
        throw Error("frame invariant violated: root is not the parent of the first leaf");
    if (f.tail_parent != f.tree.parent[f.order.back()])
        throw Error("frame invariant violated: stale tail parent");
    if (f.tail_parent != f.root && d.tree_degree(f.tail_parent) != 2)
        throw Error("frame invariant violated: tail parent neither degree two nor the root");
}

std::vector<int> rotate_cycle(const std::vector<int>& cycle, int i) {
    const int k = static_cast<int>(cycle.size());
    std::vector<int> out(k);
    for (int j = 0; j < k; ++j) out[j] = cycle[(i + j) % k];
    return out;
}

}  // namespace

BasePair find_base_pair(const TucDecomposition& d) {
    if (d.internal_count() <= 1)
        throw IsWheelError("base pair needs at least two internal vertices");
    const int k = d.k();
    RootedTree aux = rooted(d, lowest_internal(d));

    int best_i = -1, best_depth = -1, best_vertex = -1;
    for (int i = 0; i < k; ++i) {
        auto [vtx, dep] = lca(aux, d.cycle[i], d.cycle[(i + 1) % k]);
        if (dep > best_depth) {
            best_depth = dep;
            best_i = i;
            best_vertex = vtx;
        }
    }

    // between the chosen pair, at most one vertex may have degree != 2
    int exceptions = 0;
    for (int w : path_interior(aux, d.cycle[best_i], d.cycle[(best_i + 1) % k]))
        if (d.graph.degree(w) != 2) ++exceptions;
    if (exceptions > 1)
        throw Error("base pair invariant violated: several branching vertices between the pair");

    return {best_i, best_vertex};
}

VpgFrame make_vpg_frame(const TucDecomposition& d) {
    BasePair bp = find_base_pair(d);
    VpgFrame f;
    f.order = rotate_cycle(d.cycle, bp.index);
    f.root = bp.meeting_vertex;
    f.tree = rooted(d, f.root, f.order);
    validate_vpg_frame(d, f);
    return f;
}

EpgFrame make_epg_frame(const TucDecomposition& d) {
    BasePair bp = find_base_pair(d);
    std::vector<int> b = rotate_cycle(d.cycle, bp.index);
    const int k = static_cast<int>(b.size());

    int head_parent = leaf_parent(d, b[0]);
    int next_parent = leaf_parent(d, b[1]);

    EpgFrame f;
    f.order.resize(k);
    if (d.tree_degree(head_parent) == 2) {
        if (head_parent == next_parent)
            throw Error("frame invariant violated: shared degree-two parent of the base pair");
        for (int j = 0; j < k; ++j) f.order[j] = b[(j + 1) % k];
        f.root = next_parent;
    } else {
        for (int j = 0; j < k; ++j) f.order[j] = b[(k - j) % k];
        f.root = head_parent;
    }
    f.tree = rooted(d, f.root, f.order);
    f.tail_parent = f.tree.parent[f.order.back()];
    validate_epg_frame(d, f);
    return f;
}

VpgFrame make_wheel_vpg_frame(const TucDecomposition& d) {
    if (d.internal_count() != 1) throw Error("wheel frame needs a single internal vertex");
    VpgFrame f;
    f.order = d.cycle;
    f.root = lowest_internal(d);
    f.tree = rooted(d, f.root, f.order);
    validate_vpg_frame(d, f);
    return f;
}

EpgFrame make_wheel_epg_frame(const TucDecomposition& d) {
    if (d.internal_count() != 1) throw Error("wheel frame needs a single internal vertex");
    const int k = d.k();
    EpgFrame f;
    f.order.resize(k);
    for (int j = 0; j < k; ++j) f.order[j] = d.cycle[(k - j) % k];
    f.root = lowest_internal(d);
    f.tree = rooted(d, f.root, f.order);
    f.tail_parent = f.tree.parent[f.order.back()];
    validate_epg_frame(d, f);
    return f;
}

}  // namespace halin
