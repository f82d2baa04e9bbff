#ifndef HALIN_VERIFY_HPP
#define HALIN_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "halin/graph.hpp"
#include "halin/shapes.hpp"

namespace halin {

// Unfolds a shape into its rectilinear polyline; the point set is preserved
// exactly. L gives 2 segments (1 when the horizontal leg is collapsed),
// C and S give 3.
OrthoPath to_path(const LShape& s);
OrthoPath to_path(const CShape& s);
OrthoPath to_path(const SShape& s);
OrthoPath to_path(const GridSegment& s);
OrthoPath to_path(const Shape& s);

// Point sets intersect (VPG contact). Exact, segment-pair-wise.
bool paths_touch(const OrthoPath& p, const OrthoPath& q);

// Point sets share a collinear piece of positive length (EPG contact).
// Crossings and endpoint touches do not count.
bool paths_share_segment(const OrthoPath& p, const OrthoPath& q);

// Closed-form contact predicates. Each is equivalent to the corresponding
// geometric predicate on paths of the same type; the test suite checks that
// equivalence against the generic oracle.
bool lvpg_condition_intersect(const LShape& u, const LShape& v);
bool cepg_condition_share(const CShape& u, const CShape& v);
bool sepg_condition_share(const SShape& u, const SShape& v);

struct PairVerdict {
    int u, v;
    bool expected;  // adjacency in the graph
    bool got;       // geometric contact per the representation kind
    bool ok() const { return expected == got; }
};

struct VerifyReport {
    std::vector<PairVerdict> pairs;  // every unordered pair, u < v
    int mismatch_count = 0;
    int contact_count = 0;               // pairs whose paths are in contact
    std::vector<int> bend_violations;    // vertices exceeding the kind's bound
    bool passed = false;

    std::string to_text() const;  // one line per pair: "u v expected=_ got=_ OK|MISMATCH"
};

// Checks that the pairwise contact relation of rep equals g's edge relation
// and that every path respects the kind's bend bound. Throws
// MissingShapeError when a vertex of g has no shape.
VerifyReport verify_representation(const Graph& g, const Representation& rep);

}  // namespace halin

#endif
