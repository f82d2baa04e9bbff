#include "halin/tuc.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace halin {

bool TucDecomposition::is_cycle_edge(int u, int v) const {
    const int n = k();
    for (int i = 0; i < n; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % n];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

std::vector<int> RootedTree::descendant_leaves(int v) const {
    std::vector<int> out;
    auto [start, len] = leaf_interval[v];
    const int k = static_cast<int>(leaf_order.size());
    for (int j = 0; j < len; ++j) out.push_back(leaf_order[(start + j) % k]);
    return out;
}

namespace {

// Positions is a nonempty subset of {0..k-1}. Returns (start, len) if the set
// is one cyclic block, nullopt otherwise.
std::optional<std::pair<int, int>> cyclic_block(const std::vector<char>& member, int k) {
    int count = 0;
    for (int j = 0; j < k; ++j) count += member[j];
    if (count == k) return std::make_pair(0, k);
    // start = a member whose cyclic predecessor is absent; must be unique.
    int start = -1, blocks = 0;
    for (int j = 0; j < k; ++j) {
        if (member[j] && !member[(j + k - 1) % k]) {
            start = j;
            ++blocks;
        }
    }
    if (blocks != 1) return std::nullopt;
    for (int j = 0; j < count; ++j)
        if (!member[(start + j) % k]) return std::nullopt;
    return std::make_pair(start, count);
}

// Descendant-leaf positions of every vertex, as membership rows over the
// positions 0..k-1 given by leaf_pos.
std::vector<std::vector<char>> leaf_membership(const TucDecomposition& d, const RootedTree& t) {
    const int n = d.graph.size();
    const int k = d.k();
    std::vector<std::vector<char>> member(n, std::vector<char>(k, 0));
    // children-first order by decreasing depth
    std::vector<int> by_depth(n);
    std::iota(by_depth.begin(), by_depth.end(), 0);
    std::sort(by_depth.begin(), by_depth.end(),
              [&](int a, int b) { return t.depth[a] > t.depth[b]; });
    for (int v : by_depth) {
        if (t.is_leaf(v)) member[v][t.leaf_pos[v]] = 1;
        if (t.parent[v] != -1)
            for (int j = 0; j < k; ++j)
                if (member[v][j]) member[t.parent[v]][j] = 1;
    }
    return member;
}

struct SplitCheck {
    bool ok = false;
    std::vector<char> is_internal;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<std::vector<int>> tree_adj;
};

// Tests whether removing the consecutive-pair edges of `cycle` leaves a
// spanning tree whose leaves are exactly the cycle vertices, with every
// descendant-leaf set cyclically consecutive under one (hence any) root.
SplitCheck try_split(const Graph& g, const std::vector<int>& cycle) {
    SplitCheck res;
    const int n = g.size();
    const int k = static_cast<int>(cycle.size());
    std::vector<char> on_cycle(n, 0);
    for (int c : cycle) on_cycle[c] = 1;

    std::vector<std::vector<int>> tree_adj(n);
    std::vector<std::pair<int, int>> tree_edges;
    for (auto [u, v] : g.edges()) {
        bool cyc = false;
        if (on_cycle[u] && on_cycle[v]) {
            for (int i = 0; i < k && !cyc; ++i) {
                int a = cycle[i], b = cycle[(i + 1) % k];
                cyc = (a == u && b == v) || (a == v && b == u);
            }
            if (!cyc) return res;  // chord: the edge partition cannot work out
        }
        if (!cyc) {
            tree_edges.emplace_back(u, v);
            tree_adj[u].push_back(v);
            tree_adj[v].push_back(u);
        }
    }
    if (static_cast<int>(tree_edges.size()) != n - 1) return res;

    // connectivity; with n-1 edges that already certifies a tree
    std::vector<int> stack = {0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : tree_adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) return res;

    for (int v = 0; v < n; ++v) {
        bool leaf = tree_adj[v].size() == 1;
        if (leaf != static_cast<bool>(on_cycle[v])) return res;
    }

    res.is_internal.assign(n, 0);
    for (int v = 0; v < n; ++v) res.is_internal[v] = !on_cycle[v];
    res.tree_edges = std::move(tree_edges);
    res.tree_adj = std::move(tree_adj);
    res.ok = true;
    return res;
}

// Emits every induced cycle of G[candidates] with exactly k vertices, in a
// canonical form: smallest vertex first, heading toward its smaller neighbor.
template <typename Fn>
void for_each_induced_cycle(const Graph& g, const std::vector<char>& candidate, int k, Fn&& emit) {
    const int n = g.size();
    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    auto extend = [&](auto&& self, int last) -> void {
        if (static_cast<int>(path.size()) == k) {
            if (g.has_edge(last, path[0]) && path[1] < path.back()) emit(path);
            return;
        }
        for (int w : g.neighbors(last)) {
            if (!candidate[w] || on_path[w] || w <= path[0]) continue;
            // keep the path induced: w may see only its predecessor, except
            // that the closing vertex may (and must) also see path[0]
            bool chord = false;
            for (int p : path)
                if (p != last && g.has_edge(w, p)) {
                    if (p == path[0] && static_cast<int>(path.size()) == k - 1) continue;
                    chord = true;
                    break;
                }
            if (chord) continue;
            path.push_back(w);
            on_path[w] = 1;
            self(self, w);
            on_path[w] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        if (!candidate[s]) continue;
        path = {s};
        on_path[s] = 1;
        extend(extend, s);
        on_path[s] = 0;
    }
}

}  // namespace

TucDecomposition decompose(const Graph& g) {
    const int n = g.size();
    if (n < 4) throw TooSmallError("need at least 4 vertices, got " + std::to_string(n));
    const int m = g.edge_count();
    const int k = m - n + 1;  // spanning tree has n-1 edges, the rest is the cycle
    if (k < 3) throw NotTucError("edge count leaves no room for a cycle of length >= 3");
    if (k > n) throw NotTucError("edge count exceeds any tree-plus-cycle split");

    // cycle vertices are tree leaves, so they have 1 + 2 = 3 graph neighbors
    std::vector<char> candidate(n, 0);
    int candidates = 0;
    for (int v = 0; v < n; ++v) {
        candidate[v] = g.degree(v) == 3;
        candidates += candidate[v];
    }
    if (candidates < k) throw NotTucError("fewer degree-3 vertices than the required cycle length");

    bool found = false;
    std::vector<int> best_internal_ids;
    TucDecomposition best;

    for_each_induced_cycle(g, candidate, k, [&](const std::vector<int>& cycle) {
        SplitCheck split = try_split(g, cycle);
        if (!split.ok) return;

        TucDecomposition d;
        d.graph = g;
        d.cycle = cycle;
        d.is_internal = std::move(split.is_internal);
        d.tree_edges = std::move(split.tree_edges);
        d.tree_adj = std::move(split.tree_adj);
        for (auto& a : d.tree_adj) std::sort(a.begin(), a.end());

        int root = -1;
        for (int v = 0; v < n; ++v)
            if (d.is_internal[v]) {
                root = v;
                break;
            }
        if (root == -1) return;
        RootedTree t = rooted(d, root);
        if (!leaf_sets_consecutive(d, t, /*cyclic=*/true)) return;

        std::vector<int> internal_ids = d.internal_vertices();
        if (!found || internal_ids < best_internal_ids) {
            found = true;
            best_internal_ids = std::move(internal_ids);
            best = std::move(d);
        }
    });

    if (!found)
        throw NotTucError("no tree/cycle split with the leaves inducing the cycle exists");
    return best;
}

bool is_halin(const TucDecomposition& d) {
    for (int v = 0; v < d.graph.size(); ++v)
        if (d.graph.degree(v) == 2) return false;
    return true;
}

RootedTree rooted(const TucDecomposition& d, int r, const std::vector<int>& order) {
    const int n = d.graph.size();
    const int k = d.k();
    if (r < 0 || r >= n || !d.is_internal[r])
        throw NotInternalError("root must be an internal vertex");
    {
        std::vector<int> a = order, b = d.cycle;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw Error("leaf order must be a permutation of the cycle");
    }

    RootedTree t;
    t.root = r;
    t.parent.assign(n, -1);
    t.depth.assign(n, 0);
    t.leaf_order = order;
    t.leaf_pos.assign(n, -1);
    for (int j = 0; j < k; ++j) t.leaf_pos[order[j]] = j;

    std::vector<int> stack = {r};
    std::vector<char> seen(n, 0);
    seen[r] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : d.tree_adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            t.parent[w] = v;
            t.depth[w] = t.depth[v] + 1;
            t.max_depth = std::max(t.max_depth, t.depth[w]);
            stack.push_back(w);
        }
    }

    auto member = leaf_membership(d, t);
    t.leaf_interval.assign(n, {0, 0});
    t.leaf_intervals_valid = true;
    for (int v = 0; v < n; ++v) {
        auto block = cyclic_block(member[v], k);
        if (block) {
            t.leaf_interval[v] = *block;
        } else {
            t.leaf_intervals_valid = false;
        }
    }
    return t;
}

RootedTree rooted(const TucDecomposition& d, int r) { return rooted(d, r, d.cycle); }

std::pair<int, int> lca(const RootedTree& t, int u, int v) {
    while (t.depth[u] > t.depth[v]) u = t.parent[u];
    while (t.depth[v] > t.depth[u]) v = t.parent[v];
    while (u != v) {
        u = t.parent[u];
        v = t.parent[v];
    }
    return {u, t.depth[u]};
}

bool leaf_sets_consecutive(const TucDecomposition& d, const RootedTree& t, bool cyclic) {
    const int k = d.k();
    auto member = leaf_membership(d, t);
    for (int v = 0; v < d.graph.size(); ++v) {
        if (!d.is_internal[v]) continue;
        auto block = cyclic_block(member[v], k);
        if (!block) return false;
        if (!cyclic) {
            auto [start, len] = *block;
            if (len < k && start + len > k) return false;  // wraps
        }
    }
    return true;
}

}  // namespace halin
