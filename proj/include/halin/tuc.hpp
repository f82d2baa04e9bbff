#ifndef HALIN_TUC_HPP
#define HALIN_TUC_HPP

#include <utility>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

// Certified split of a graph into a spanning tree T and the cycle C through
// exactly the tree's leaves. `cycle` holds c_0..c_{k-1} in rim order; the
// cycle edges are the consecutive pairs (mod k) and tree_edges is everything
// else. Instances are only produced by decompose(), which validates all
// invariants, including that every descendant-leaf set is cyclically
// consecutive in the rim order (the stand-in for planarity).
struct TucDecomposition {
    Graph graph;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<int> cycle;                 // c_0..c_{k-1}
    std::vector<char> is_internal;          // per vertex
    std::vector<std::vector<int>> tree_adj; // tree edges only, sorted

    int k() const { return static_cast<int>(cycle.size()); }

    int internal_count() const {
        int c = 0;
        for (char b : is_internal) c += b;
        return c;
    }

    std::vector<int> internal_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < graph.size(); ++v)
            if (is_internal[v]) out.push_back(v);
        return out;
    }

    int tree_degree(int v) const { return static_cast<int>(tree_adj[v].size()); }

    bool is_cycle_edge(int u, int v) const;
};

// Tree rooted at an internal vertex, plus a designated linear order of the
// leaves. leaf_interval[v] = (start, len) describes the descendant-leaf set of
// v as a cyclic window into leaf_order; the windows are only meaningful when
// leaf_intervals_valid is set (it is false when the supplied order makes some
// descendant-leaf set non-contiguous).
struct RootedTree {
    int root = -1;
    std::vector<int> parent;    // -1 at the root
    std::vector<int> depth;     // edges from the root
    int max_depth = 0;
    std::vector<int> leaf_order;
    std::vector<int> leaf_pos;  // inverse of leaf_order, -1 for internal
    std::vector<std::pair<int, int>> leaf_interval;
    bool leaf_intervals_valid = false;

    bool is_leaf(int v) const { return leaf_pos[v] >= 0; }

    // Expands leaf_interval[v] into the actual vertex set, in leaf_order.
    std::vector<int> descendant_leaves(int v) const;

    bool is_ancestor(int anc, int v) const {
        while (v != -1) {
            if (v == anc) return true;
            v = parent[v];
        }
        return false;
    }
};

// Splits g into tree + leaf cycle, or throws TooSmallError / NotTucError.
// When several splits exist (e.g. the triangular prism has three) the one
// whose internal vertex set is lexicographically smallest is returned, with
// the cycle sequence canonicalized to start at its smallest vertex id and run
// toward that vertex's smaller cycle neighbor.
TucDecomposition decompose(const Graph& g);

// No vertex of the whole graph has degree 2.
bool is_halin(const TucDecomposition& d);

// Roots the tree at internal vertex r (else NotInternalError) and indexes the
// leaves by `order`, which must be a permutation of d.cycle. Rim rotations
// and reflections yield valid intervals; other permutations are accepted but
// leave leaf_intervals_valid unset.
RootedTree rooted(const TucDecomposition& d, int r, const std::vector<int>& order);

// Convenience: rim order as stored in the decomposition.
RootedTree rooted(const TucDecomposition& d, int r);

// Minimum-depth vertex on the tree path between u and v (their lowest common
// ancestor), with its depth.
std::pair<int, int> lca(const RootedTree& t, int u, int v);

// True iff every internal vertex's descendant-leaf set occupies a contiguous
// window of leaf_order — cyclic windows allowed when cyclic is set, otherwise
// the window must not wrap. Recomputes the sets by traversal; does not trust
// leaf_interval.
bool leaf_sets_consecutive(const TucDecomposition& d, const RootedTree& t, bool cyclic);

}  // namespace halin

#endif
