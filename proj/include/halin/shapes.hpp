#ifndef HALIN_SHAPES_HPP
#define HALIN_SHAPES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "halin/rational.hpp"

namespace halin {

// One-bend path: vertical leg at x_lo spanning [y_lo, y_hi], horizontal leg
// at y_lo spanning [x_lo, x_hi], corner at (x_lo, y_lo). x_lo == x_hi is
// allowed (the horizontal leg collapses and the path is a plain segment);
// that happens for internal vertices with a single descendant leaf.
struct LShape {
    Rat x_lo, x_hi, y_lo, y_hi;

    bool operator==(const LShape&) const = default;
};

// Two-bend path opening to the right: vertical spine at spine_x spanning
// [y_lo, y_hi], bottom arm at y_lo from spine_x to bottom_x, top arm at y_hi
// from spine_x to top_x.
struct CShape {
    Rat spine_x, bottom_x, top_x, y_lo, y_hi;

    bool operator==(const CShape&) const = default;
};

// Two-bend step: bottom arm at y_lo from x_lo to x_mid, vertical riser at
// x_mid spanning [y_lo, y_hi], top arm at y_hi from x_mid to x_hi.
struct SShape {
    Rat x_lo, x_mid, x_hi, y_lo, y_hi;

    bool operator==(const SShape&) const = default;
};

void check_invariants(const LShape& s);  // throws DegenerateShapeError
void check_invariants(const CShape& s);
void check_invariants(const SShape& s);

// Axis-parallel grid segment with integer coordinates, as placed by the
// zero-bend search. fixed_coord is y for horizontal segments, x for vertical.
struct GridSegment {
    bool horizontal = true;
    int fixed_coord = 0;
    int lo = 0, hi = 0;  // lo < hi along the segment's axis

    bool operator==(const GridSegment&) const = default;
};

// Rectilinear polyline with exact coordinates: consecutive points differ in
// exactly one coordinate, segments alternate orientation, none has zero
// length. bends() = segment count - 1.
struct OrthoPath {
    struct Point {
        Rat x, y;
        bool operator==(const Point&) const = default;
    };
    std::vector<Point> points;

    int segment_count() const { return static_cast<int>(points.size()) - 1; }
    int bends() const { return segment_count() - 1; }

    bool operator==(const OrthoPath&) const = default;
};

// Validates the OrthoPath invariants; throws DegenerateShapeError.
void check_invariants(const OrthoPath& p);

enum class RepKind { VpgL, EpgC, EpgS, VpgSeg };

// VPG kinds relate paths by sharing a point; EPG kinds by sharing a segment
// of positive length.
inline bool kind_is_epg(RepKind k) { return k == RepKind::EpgC || k == RepKind::EpgS; }

inline int kind_bend_bound(RepKind k) {
    switch (k) {
        case RepKind::VpgL: return 1;
        case RepKind::EpgC:
        case RepKind::EpgS: return 2;
        case RepKind::VpgSeg: return 0;
    }
    return 0;
}

std::string kind_tag(RepKind k);                // "vpg-L", "epg-C", "epg-S", "vpg-seg"
RepKind kind_from_tag(const std::string& tag);  // throws Error on unknown tag

using Shape = std::variant<LShape, CShape, SShape, OrthoPath>;

// One grid path per vertex. All coordinates have denominators dividing
// scale_den (2 for the L construction, 4 for C, 2h for S).
struct Representation {
    RepKind kind = RepKind::VpgL;
    std::int64_t scale_den = 1;
    std::map<int, Shape> shapes;

    bool operator==(const Representation&) const = default;
};

// True when the variant alternative matches what the kind promises
// (VpgSeg additionally requires a bend-free path).
bool shape_matches_kind(const Shape& s, RepKind k);

}  // namespace halin

#endif
