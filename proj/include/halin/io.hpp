#ifndef HALIN_IO_HPP
#define HALIN_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "halin/graph.hpp"
#include "halin/shapes.hpp"

namespace halin {

// Graph file format: a header line "n m", then m lines "u v" with 0-based
// ids. Lines starting with '#' are comments; "# label <id> <name>" attaches
// a vertex label. Throws SyntaxError / DuplicateEdgeError / IdOutOfRangeError
// with 1-based line numbers.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// How a representation was derived; carried alongside the shapes in the
// document format. base_index is -1 when no base pair was involved (wheels,
// search witnesses); order is the leaf relabeling, empty when none applies.
struct Provenance {
    int root = -1;
    int base_index = -1;
    std::vector<int> order;

    bool operator==(const Provenance&) const = default;
};

struct RepresentationDocument {
    Representation rep;
    Provenance provenance;

    bool operator==(const RepresentationDocument&) const = default;
};

// Line-oriented document with a fixed field order and every coordinate as an
// exact "p/q" string; emit/parse round-trip exactly.
std::string emit_document(const RepresentationDocument& doc);
RepresentationDocument parse_document(const std::string& text);

// Deterministic random tree-plus-rim instance. The plane tree gets
// internal_target internal vertices; leaves are attached so that, unless
// allow_degree_two is set, every internal vertex keeps degree >= 3 (root
// included), which makes the output a Halin graph. With allow_degree_two,
// chains and branch vertices of degree two may appear. Leaves are wired into
// a cycle in depth-first order, so the result always decomposes.
Graph gen_halin(std::uint64_t seed, int internal_target, bool allow_degree_two = false);

// One polyline per vertex, distinct stroke colors, a text label at the first
// bend (or start) of each path, viewBox fitted with a 5% margin. Pixel
// coordinates are rep coordinates times 20 * scale_den, hence integers.
std::string emit_svg(const Representation& rep, const Graph& g);

}  // namespace halin

#endif
