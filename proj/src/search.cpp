#include "halin/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace halin {

int normalize_grid_bound(int n) { return 2 * n; }

namespace {

struct Cand {
    std::uint8_t horizontal;
    std::uint8_t fixed;
    std::uint8_t lo, hi;
};

bool cands_touch(const Cand& a, const Cand& b) {
    if (a.horizontal == b.horizontal)
        return a.fixed == b.fixed && std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
    return b.fixed >= a.lo && b.fixed <= a.hi && a.fixed >= b.lo && a.fixed <= b.hi;
}

// Fixed-width bitset over candidate ids.
struct Mask {
    std::vector<std::uint64_t> w;
    explicit Mask(int bits = 0) : w((bits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
};

struct Searcher {
    const Graph& g;
    int grid;
    SearchOptions opts;
    int n;
    std::vector<int> order;           // placement order
    std::vector<Cand> cands;
    int num_cands = 0;
    std::vector<Mask> touch, avoid;   // per candidate: touching / disjoint candidates
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::vector<int> chosen;          // candidate id per placement depth

    // one scratch row per (depth, vertex)
    std::vector<Mask> domains;

    // per-depth used-coordinate masks for the gap-freeness prune
    std::vector<std::uint64_t> used_x, used_y;

    Searcher(const Graph& g_, int grid_, const SearchOptions& o) : g(g_), grid(grid_), opts(o) {
        n = g.size();
        if (grid < normalize_grid_bound(n))
            throw GridTooSmallError("grid " + std::to_string(grid) + " below the exhaustive bound " +
                                    std::to_string(normalize_grid_bound(n)));
        if (grid > 64) throw Error("grid sizes above 64 are not supported");

        if (opts.order_override) {
            order = *opts.order_override;
        } else {
            order.resize(n);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return g.degree(a) > g.degree(b); });
        }

        for (int horiz = 1; horiz >= 0; --horiz)
            for (int fixed = 0; fixed < grid; ++fixed)
                for (int lo = 0; lo < grid; ++lo)
                    for (int hi = lo + 1; hi < grid; ++hi)
                        cands.push_back({static_cast<std::uint8_t>(horiz),
                                         static_cast<std::uint8_t>(fixed),
                                         static_cast<std::uint8_t>(lo),
                                         static_cast<std::uint8_t>(hi)});
        num_cands = static_cast<int>(cands.size());

        touch.assign(num_cands, Mask(num_cands));
        avoid.assign(num_cands, Mask(num_cands));
        for (int i = 0; i < num_cands; ++i)
            for (int j = 0; j < num_cands; ++j)
                (cands_touch(cands[i], cands[j]) ? touch[i] : avoid[i]).set(j);

        domains.assign(static_cast<std::size_t>(n + 1) * n, Mask(num_cands));
        used_x.assign(n + 1, 0);
        used_y.assign(n + 1, 0);
        chosen.assign(n, -1);
    }

    Mask& domain(int depth, int vertex_slot) { return domains[static_cast<std::size_t>(depth) * n + vertex_slot]; }

    // Any representation can be normalized so that the first-placed vertex is
    // horizontal (rotate the plane), its y sits in the lower half of the used
    // values (reflect vertically) and its interval is not right-heavy
    // (reflect horizontally); used values per axis can be assumed to form a
    // gap-free block starting at 0 (order-preserving renumbering).
    bool root_allowed(const Cand& c) const {
        return c.horizontal && 2 * c.fixed <= grid - 1 && c.lo + c.hi <= grid - 1;
    }

    static int holes(std::uint64_t used) {
        if (!used) return 0;
        int top = 63 - std::countl_zero(used);
        return top + 1 - std::popcount(used);
    }

    void mark_used(int depth, const Cand& c) {
        used_x[depth + 1] = used_x[depth];
        used_y[depth + 1] = used_y[depth];
        if (c.horizontal) {
            used_x[depth + 1] |= (1ULL << c.lo) | (1ULL << c.hi);
            used_y[depth + 1] |= 1ULL << c.fixed;
        } else {
            used_x[depth + 1] |= 1ULL << c.fixed;
            used_y[depth + 1] |= (1ULL << c.lo) | (1ULL << c.hi);
        }
    }

    bool place(int depth) {
        if (depth == n) return true;
        const int v = order[depth];
        Mask& dom = domain(depth, depth);

        for (int word = 0; word < static_cast<int>(dom.w.size()); ++word) {
            std::uint64_t bits = dom.w[word];
            while (bits) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                int cand_id = (word << 6) | bit;

                if (++nodes > opts.node_budget) {
                    aborted = true;
                    return false;
                }
                if (opts.progress && (nodes & ((1 << 20) - 1)) == 0)
                    opts.progress(nodes, depth);

                const Cand& c = cands[cand_id];
                if (depth == 0 && !root_allowed(c)) continue;

                mark_used(depth, c);
                int remaining = n - depth - 1;
                if (holes(used_x[depth + 1]) > 2 * remaining ||
                    holes(used_y[depth + 1]) > 2 * remaining)
                    continue;

                // forward-check the still-unplaced vertices
                bool dead = false;
                for (int slot = depth + 1; slot < n && !dead; ++slot) {
                    const Mask& constraint =
                        g.has_edge(v, order[slot]) ? touch[cand_id] : avoid[cand_id];
                    Mask& next = domain(depth + 1, slot);
                    const Mask& cur = domain(depth, slot);
                    std::uint64_t alive = 0;
                    for (std::size_t k = 0; k < cur.w.size(); ++k) {
                        next.w[k] = cur.w[k] & constraint.w[k];
                        alive |= next.w[k];
                    }
                    dead = alive == 0;
                }
                if (dead) continue;

                chosen[depth] = cand_id;
                if (place(depth + 1)) return true;
                if (aborted) return false;
            }
        }
        return false;
    }

    SearchOutcome run() {
        SearchOutcome out;
        for (int slot = 0; slot < n; ++slot) {
            Mask& dom = domain(0, slot);
            for (auto& w : dom.w) w = ~0ULL;
            // clear bits past num_cands
            int spare = static_cast<int>(dom.w.size()) * 64 - num_cands;
            if (spare > 0) dom.w.back() &= ~0ULL >> spare;
        }

        bool sat = n == 0 ? true : place(0);
        out.nodes_explored = nodes;
        if (aborted) {
            out.status = SearchOutcome::Status::Aborted;
        } else if (sat) {
            out.status = SearchOutcome::Status::Sat;
            std::map<int, GridSegment> witness;
            for (int depth = 0; depth < n; ++depth) {
                const Cand& c = cands[chosen[depth]];
                witness[order[depth]] =
                    GridSegment{static_cast<bool>(c.horizontal), c.fixed, c.lo, c.hi};
            }
            out.witness = std::move(witness);
        } else {
            out.status = SearchOutcome::Status::Unsat;
        }
        return out;
    }
};

}  // namespace

SearchOutcome search_b0_vpg(const Graph& g, int grid, const SearchOptions& opts) {
    if (opts.order_override && static_cast<int>(opts.order_override->size()) != g.size())
        throw Error("placement order must cover every vertex");
    Searcher s(g, grid, opts);
    return s.run();
}

Representation witness_representation(const std::map<int, GridSegment>& witness) {
    Representation rep;
    rep.kind = RepKind::VpgSeg;
    rep.scale_den = 1;
    for (const auto& [v, seg] : witness) {
        OrthoPath p;
        if (seg.horizontal) {
            p.points.push_back({Rat(seg.lo), Rat(seg.fixed_coord)});
            p.points.push_back({Rat(seg.hi), Rat(seg.fixed_coord)});
        } else {
            p.points.push_back({Rat(seg.fixed_coord), Rat(seg.lo)});
            p.points.push_back({Rat(seg.fixed_coord), Rat(seg.hi)});
        }
        rep.shapes.emplace(v, std::move(p));
    }
    return rep;
}

}  // namespace halin
