#include "halin/verify.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace halin {

void check_invariants(const LShape& s) {
    if (s.x_lo > s.x_hi || s.y_lo >= s.y_hi)
        throw DegenerateShapeError("invalid L-shape extents");
}

void check_invariants(const CShape& s) {
    if (s.spine_x >= s.bottom_x || s.spine_x >= s.top_x || s.y_lo >= s.y_hi)
        throw DegenerateShapeError("invalid C-shape extents");
}

void check_invariants(const SShape& s) {
    if (s.x_lo >= s.x_mid || s.x_mid >= s.x_hi || s.y_lo >= s.y_hi)
        throw DegenerateShapeError("invalid S-shape extents");
}

void check_invariants(const OrthoPath& p) {
    if (p.points.size() < 2) throw DegenerateShapeError("path needs at least one segment");
    bool prev_horizontal = false;
    for (std::size_t i = 1; i < p.points.size(); ++i) {
        const auto& a = p.points[i - 1];
        const auto& b = p.points[i];
        bool horizontal = a.y == b.y;
        bool vertical = a.x == b.x;
        if (horizontal == vertical)  // diagonal or zero-length
            throw DegenerateShapeError("path segment must be axis-parallel and non-degenerate");
        if (i > 1 && horizontal == prev_horizontal)
            throw DegenerateShapeError("consecutive path segments must alternate orientation");
        prev_horizontal = horizontal;
    }
}

OrthoPath to_path(const LShape& s) {
    check_invariants(s);
    OrthoPath p;
    p.points.push_back({s.x_lo, s.y_hi});
    p.points.push_back({s.x_lo, s.y_lo});
    if (s.x_lo != s.x_hi) p.points.push_back({s.x_hi, s.y_lo});
    check_invariants(p);
    return p;
}

OrthoPath to_path(const CShape& s) {
    check_invariants(s);
    OrthoPath p;
    p.points.push_back({s.bottom_x, s.y_lo});
    p.points.push_back({s.spine_x, s.y_lo});
    p.points.push_back({s.spine_x, s.y_hi});
    p.points.push_back({s.top_x, s.y_hi});
    check_invariants(p);
    return p;
}

OrthoPath to_path(const SShape& s) {
    check_invariants(s);
    OrthoPath p;
    p.points.push_back({s.x_lo, s.y_lo});
    p.points.push_back({s.x_mid, s.y_lo});
    p.points.push_back({s.x_mid, s.y_hi});
    p.points.push_back({s.x_hi, s.y_hi});
    check_invariants(p);
    return p;
}

OrthoPath to_path(const GridSegment& s) {
    if (s.lo >= s.hi) throw DegenerateShapeError("grid segment needs lo < hi");
    OrthoPath p;
    if (s.horizontal) {
        p.points.push_back({Rat(s.lo), Rat(s.fixed_coord)});
        p.points.push_back({Rat(s.hi), Rat(s.fixed_coord)});
    } else {
        p.points.push_back({Rat(s.fixed_coord), Rat(s.lo)});
        p.points.push_back({Rat(s.fixed_coord), Rat(s.hi)});
    }
    return p;
}

OrthoPath to_path(const Shape& s) {
    return std::visit([](const auto& inner) -> OrthoPath {
        if constexpr (std::is_same_v<std::decay_t<decltype(inner)>, OrthoPath>) {
            check_invariants(inner);
            return inner;
        } else {
            return to_path(inner);
        }
    }, s);
}

namespace {

struct Seg {
    bool horizontal;
    Rat fixed;    // y for horizontal, x for vertical
    Rat lo, hi;   // extent along the segment's axis, lo < hi
};

std::vector<Seg> segments_of(const OrthoPath& p) {
    std::vector<Seg> out;
    for (std::size_t i = 1; i < p.points.size(); ++i) {
        const auto& a = p.points[i - 1];
        const auto& b = p.points[i];
        Seg s;
        s.horizontal = a.y == b.y;
        if (s.horizontal) {
            s.fixed = a.y;
            s.lo = std::min(a.x, b.x);
            s.hi = std::max(a.x, b.x);
        } else {
            s.fixed = a.x;
            s.lo = std::min(a.y, b.y);
            s.hi = std::max(a.y, b.y);
        }
        out.push_back(s);
    }
    return out;
}

bool segs_touch(const Seg& a, const Seg& b) {
    if (a.horizontal == b.horizontal)
        return a.fixed == b.fixed && overlap_nonempty(a.lo, a.hi, b.lo, b.hi);
    // perpendicular: each fixed coordinate falls into the other's extent
    return in_closed(b.fixed, a.lo, a.hi) && in_closed(a.fixed, b.lo, b.hi);
}

bool segs_share(const Seg& a, const Seg& b) {
    return a.horizontal == b.horizontal && a.fixed == b.fixed &&
           overlap_positive(a.lo, a.hi, b.lo, b.hi);
}

}  // namespace

bool paths_touch(const OrthoPath& p, const OrthoPath& q) {
    auto sp = segments_of(p), sq = segments_of(q);
    for (const auto& a : sp)
        for (const auto& b : sq)
            if (segs_touch(a, b)) return true;
    return false;
}

bool paths_share_segment(const OrthoPath& p, const OrthoPath& q) {
    auto sp = segments_of(p), sq = segments_of(q);
    for (const auto& a : sp)
        for (const auto& b : sq)
            if (segs_share(a, b)) return true;
    return false;
}

bool lvpg_condition_intersect(const LShape& u, const LShape& v) {
    bool c1 = in_closed(u.x_lo, v.x_lo, v.x_hi) && in_closed(v.y_lo, u.y_lo, u.y_hi);
    bool c2 = in_closed(v.x_lo, u.x_lo, u.x_hi) && in_closed(u.y_lo, v.y_lo, v.y_hi);
    return c1 || c2;
}

bool cepg_condition_share(const CShape& u, const CShape& v) {
    if (u.y_lo == v.y_lo &&
        overlap_positive(u.spine_x, u.bottom_x, v.spine_x, v.bottom_x))
        return true;
    if (u.y_hi == v.y_hi && overlap_positive(u.spine_x, u.top_x, v.spine_x, v.top_x))
        return true;
    if (u.y_lo == v.y_hi && overlap_positive(u.spine_x, u.bottom_x, v.spine_x, v.top_x))
        return true;
    if (v.y_lo == u.y_hi && overlap_positive(v.spine_x, v.bottom_x, u.spine_x, u.top_x))
        return true;
    if (u.spine_x == v.spine_x && overlap_positive(u.y_lo, u.y_hi, v.y_lo, v.y_hi))
        return true;
    return false;
}

bool sepg_condition_share(const SShape& u, const SShape& v) {
    if (u.y_lo == v.y_lo && overlap_positive(u.x_lo, u.x_mid, v.x_lo, v.x_mid)) return true;
    if (u.y_hi == v.y_hi && overlap_positive(u.x_mid, u.x_hi, v.x_mid, v.x_hi)) return true;
    if (u.y_lo == v.y_hi && overlap_positive(u.x_lo, u.x_mid, v.x_mid, v.x_hi)) return true;
    if (v.y_lo == u.y_hi && overlap_positive(v.x_lo, v.x_mid, u.x_mid, u.x_hi)) return true;
    if (u.x_mid == v.x_mid && overlap_positive(u.y_lo, u.y_hi, v.y_lo, v.y_hi)) return true;
    return false;
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    for (const auto& p : pairs)
        out << p.u << ' ' << p.v << " expected=" << (p.expected ? 1 : 0)
            << " got=" << (p.got ? 1 : 0) << ' ' << (p.ok() ? "OK" : "MISMATCH") << '\n';
    return out.str();
}

VerifyReport verify_representation(const Graph& g, const Representation& rep) {
    const int n = g.size();
    std::vector<OrthoPath> paths(n);
    VerifyReport report;

    for (int v = 0; v < n; ++v) {
        auto it = rep.shapes.find(v);
        if (it == rep.shapes.end())
            throw MissingShapeError("vertex " + std::to_string(v) + " has no shape");
        paths[v] = to_path(it->second);
        if (paths[v].bends() > kind_bend_bound(rep.kind)) report.bend_violations.push_back(v);
    }

    const bool epg = kind_is_epg(rep.kind);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            PairVerdict pv;
            pv.u = u;
            pv.v = v;
            pv.expected = g.has_edge(u, v);
            pv.got = epg ? paths_share_segment(paths[u], paths[v])
                         : paths_touch(paths[u], paths[v]);
            if (!pv.ok()) ++report.mismatch_count;
            if (pv.got) ++report.contact_count;
            report.pairs.push_back(pv);
        }
    }
    report.passed = report.mismatch_count == 0 && report.bend_violations.empty();
    return report;
}

std::string kind_tag(RepKind k) {
    switch (k) {
        case RepKind::VpgL: return "vpg-L";
        case RepKind::EpgC: return "epg-C";
        case RepKind::EpgS: return "epg-S";
        case RepKind::VpgSeg: return "vpg-seg";
    }
    throw Error("unknown representation kind");
}

RepKind kind_from_tag(const std::string& tag) {
    if (tag == "vpg-L") return RepKind::VpgL;
    if (tag == "epg-C") return RepKind::EpgC;
    if (tag == "epg-S") return RepKind::EpgS;
    if (tag == "vpg-seg") return RepKind::VpgSeg;
    throw Error("unknown representation kind tag '" + tag + "'");
}

bool shape_matches_kind(const Shape& s, RepKind k) {
    switch (k) {
        case RepKind::VpgL: return std::holds_alternative<LShape>(s);
        case RepKind::EpgC: return std::holds_alternative<CShape>(s);
        case RepKind::EpgS: return std::holds_alternative<SShape>(s);
        case RepKind::VpgSeg: {
            const auto* p = std::get_if<OrthoPath>(&s);
            return p && p->bends() == 0;
        }
    }
    return false;
}

}  // namespace halin
