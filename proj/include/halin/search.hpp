#ifndef HALIN_SEARCH_HPP
#define HALIN_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "halin/graph.hpp"
#include "halin/shapes.hpp"

namespace halin {

struct SearchOutcome {
    enum class Status { Sat, Unsat, Aborted };
    Status status = Status::Unsat;
    std::optional<std::map<int, GridSegment>> witness;  // present iff Sat
    std::uint64_t nodes_explored = 0;
};

// Called periodically with (nodes explored so far, current depth).
using SearchProgress = std::function<void(std::uint64_t, int)>;

// Smallest grid that keeps the search exhaustive for an n-vertex graph: any
// segment representation can be deformed, order-preserving per axis, so that
// all endpoint coordinates land on at most 2n integers (each segment
// contributes at most two distinct values per axis).
int normalize_grid_bound(int n);

struct SearchOptions {
    std::uint64_t node_budget = 10'000'000'000ULL;
    SearchProgress progress;                 // optional
    const std::vector<int>* order_override = nullptr;  // placement order, for tests
};

// Decides whether g has a representation by axis-parallel grid segments with
// integer coordinates in [0, grid), segments touching exactly when their
// vertices are adjacent. Backtracking over vertices in descending-degree
// order with per-vertex candidate masks. Complete relative to the grid
// normalization above, so grid >= normalize_grid_bound(n) is required
// (GridTooSmallError otherwise) and Unsat then refutes every segment
// representation. Sat comes with a witness; exceeding the node budget yields
// Aborted.
SearchOutcome search_b0_vpg(const Graph& g, int grid, const SearchOptions& opts = {});

// Witness as a verifiable representation (kind vpg-seg, zero bends).
Representation witness_representation(const std::map<int, GridSegment>& witness);

}  // namespace halin

#endif
