#ifndef HALIN_TESTS_SUPPORT_HPP
#define HALIN_TESTS_SUPPORT_HPP

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "halin/io.hpp"
#include "halin/tuc.hpp"

namespace testsupport {

inline std::string read_fixture(const std::string& name) {
    std::string path = std::string(HALIN_DATA_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline halin::Graph load_graph_fixture(const std::string& name) {
    return halin::parse_graph(read_fixture(name));
}

inline halin::Graph fig1_graph() { return load_graph_fixture("fig1.graph"); }

inline halin::Graph wheel(int rim) {
    halin::Graph g(rim + 1);
    for (int i = 0; i < rim; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(1 + i, 1 + (i + 1) % rim);
    }
    return g;
}

// Non-Halin instance whose base leaf pair hangs off degree-two chains:
// internal 0 (degree 2, root-ish), 2, and the chain vertices 3 and 5;
// leaves 1, 4, 6 form the rim.
inline halin::Graph chain_tuc_a() {
    halin::Graph g(7);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {2, 3}, {2, 5}, {3, 4}, {5, 6}}) g.add_edge(u, v);
    for (auto [u, v] : {std::pair{1, 4}, {4, 6}, {6, 1}}) g.add_edge(u, v);
    return g;
}

// Non-Halin instance where the branching end of the base pair wins the
// reroot and the tail parent is a fresh degree-two vertex.
inline halin::Graph chain_tuc_b() {
    halin::Graph g(6);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}}) g.add_edge(u, v);
    for (auto [u, v] : {std::pair{1, 3}, {3, 5}, {5, 1}}) g.add_edge(u, v);
    return g;
}

// Smallest tree-union-cycle graph with two internal vertices: internal 0, 1;
// leaves 2, 3 under 0 and 4 under 1.
inline halin::Graph min_two_internal_tuc() {
    halin::Graph g(5);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 4}}) g.add_edge(u, v);
    for (auto [u, v] : {std::pair{2, 3}, {3, 4}, {4, 2}}) g.add_edge(u, v);
    return g;
}

inline halin::Graph path_graph(int n) {
    halin::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline halin::Graph complete_graph(int n) {
    halin::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// ---- independent oracles -------------------------------------------------

// All positions of `subset` within `order`, for consecutiveness checks.
inline bool cyclically_consecutive(const std::vector<int>& order, const std::set<int>& subset) {
    const int k = static_cast<int>(order.size());
    std::vector<char> member(k, 0);
    for (int j = 0; j < k; ++j) member[j] = subset.count(order[j]) > 0;
    int count = 0;
    for (char c : member) count += c;
    if (count == 0 || count == k) return true;
    int blocks = 0;
    for (int j = 0; j < k; ++j)
        if (member[j] && !member[(j + k - 1) % k]) ++blocks;
    return blocks == 1;
}

// Descendant leaves by plain traversal over the tree adjacency, ignoring the
// packed intervals entirely.
inline std::set<int> brute_descendant_leaves(const halin::TucDecomposition& d,
                                             const halin::RootedTree& t, int v) {
    std::set<int> out;
    std::vector<int> stack = {v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (t.is_leaf(u)) out.insert(u);
        for (int w : d.tree_adj[u])
            if (w != t.parent[u] && t.parent[w] == u) stack.push_back(w);
    }
    return out;
}

struct BrutePartition {
    std::set<std::pair<int, int>> cycle_edges;
    std::set<int> internal;
};

// Exhaustive enumeration of all valid tree/cycle edge partitions of g,
// trying every edge subset as the cycle. Only for tiny graphs.
inline std::vector<BrutePartition> brute_force_partitions(const halin::Graph& g) {
    std::vector<BrutePartition> found;
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.size();
    if (m > 16) throw std::runtime_error("brute-force partition oracle limited to 16 edges");

    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<std::pair<int, int>> cyc;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) cyc.push_back(edges[i]);
        if (static_cast<int>(cyc.size()) < 3) continue;

        std::vector<int> cdeg(n, 0);
        std::set<int> support;
        for (auto [u, v] : cyc) {
            ++cdeg[u];
            ++cdeg[v];
            support.insert(u);
            support.insert(v);
        }
        if (static_cast<int>(cyc.size()) != static_cast<int>(support.size())) continue;
        bool bad = false;
        for (int v : support)
            if (cdeg[v] != 2) bad = true;
        if (bad) continue;
        // single cycle: walk it
        {
            std::vector<std::vector<int>> cadj(n);
            for (auto [u, v] : cyc) {
                cadj[u].push_back(v);
                cadj[v].push_back(u);
            }
            int start = *support.begin(), prev = -1, cur = start, steps = 0;
            do {
                int next = (cadj[cur][0] == prev) ? cadj[cur][1] : cadj[cur][0];
                prev = cur;
                cur = next;
                ++steps;
            } while (cur != start && steps <= static_cast<int>(cyc.size()));
            if (steps != static_cast<int>(cyc.size())) continue;
        }

        std::vector<std::vector<int>> tadj(n);
        int tcount = 0;
        for (int i = 0; i < m; ++i)
            if (!(mask & (1 << i))) {
                tadj[edges[i].first].push_back(edges[i].second);
                tadj[edges[i].second].push_back(edges[i].first);
                ++tcount;
            }
        if (tcount != n - 1) continue;
        std::vector<char> seen(n, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : tadj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n) continue;
        bad = false;
        for (int v = 0; v < n; ++v) {
            bool leaf = tadj[v].size() == 1;
            if (leaf != (support.count(v) > 0)) bad = true;
        }
        if (bad) continue;

        // consecutiveness under one root, brute force
        std::vector<int> order;
        {
            std::vector<std::vector<int>> cadj(n);
            for (auto [u, v] : cyc) {
                cadj[u].push_back(v);
                cadj[v].push_back(u);
            }
            int start = *support.begin(), prev = -1, cur = start;
            do {
                order.push_back(cur);
                int next = (cadj[cur][0] == prev) ? cadj[cur][1] : cadj[cur][0];
                prev = cur;
                cur = next;
            } while (cur != start);
        }
        int root = -1;
        for (int v = 0; v < n && root < 0; ++v)
            if (!support.count(v)) root = v;
        if (root < 0) continue;
        // parent pointers via BFS on the tree
        std::vector<int> parent(n, -2);
        parent[root] = -1;
        std::vector<int> q = {root};
        for (std::size_t h = 0; h < q.size(); ++h)
            for (int w : tadj[q[h]])
                if (parent[w] == -2) {
                    parent[w] = q[h];
                    q.push_back(w);
                }
        bool consec = true;
        for (int v = 0; v < n && consec; ++v) {
            if (support.count(v)) continue;
            std::set<int> leaves;
            for (int u : support) {
                for (int w = u; w != -1; w = parent[w])
                    if (w == v) {
                        leaves.insert(u);
                        break;
                    }
            }
            consec = cyclically_consecutive(order, leaves);
        }
        if (!consec) continue;

        BrutePartition part;
        for (auto [u, v] : cyc) part.cycle_edges.insert({std::min(u, v), std::max(u, v)});
        for (int v = 0; v < n; ++v)
            if (!support.count(v)) part.internal.insert(v);
        found.push_back(std::move(part));
    }
    return found;
}

}  // namespace testsupport

#endif
