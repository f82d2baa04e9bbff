#ifndef HALIN_GRAPH_HPP
#define HALIN_GRAPH_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "halin/errors.hpp"

namespace halin {

// Simple undirected graph with dense vertex ids 0..n-1 and sorted adjacency
// lists. Immutable once built up; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int size() const { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw Error("edge endpoint out of range");
        if (u == v) throw Error("self-loop rejected");
        if (has_edge(u, v)) throw Error("parallel edge rejected");
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
    }

    bool has_edge(int u, int v) const {
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int edge_count() const {
        int total = 0;
        for (const auto& a : adj_) total += static_cast<int>(a.size());
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < size(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void set_label(int v, std::string name) {
        if (labels_.empty()) labels_.resize(adj_.size());
        labels_[v] = std::move(name);
    }

    // Falls back to "v<i>" when no label was assigned.
    std::string label(int v) const {
        if (v < static_cast<int>(labels_.size()) && !labels_[v].empty()) return labels_[v];
        return "v" + std::to_string(v);
    }

    bool has_labels() const { return !labels_.empty(); }

    // Vertex id carrying a given label, or -1.
    int find_label(const std::string& name) const {
        for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
            if (labels_[v] == name) return v;
        return -1;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    static void insert_sorted(std::vector<int>& a, int v) {
        a.insert(std::upper_bound(a.begin(), a.end(), v), v);
    }

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

}  // namespace halin

#endif
