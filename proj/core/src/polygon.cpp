#include "polytile/polygon.hpp"

#include "polytile/errors.hpp"

#include <algorithm>
#include <map>

namespace polytile {

std::vector<RatPoint> PolygonalSet::vertices() const {
    std::vector<RatPoint> out;
    for (const auto& poly : polygons) {
        out.insert(out.end(), poly.outer.begin(), poly.outer.end());
        for (const auto& hole : poly.holes) {
            out.insert(out.end(), hole.begin(), hole.end());
        }
    }
    return out;
}

std::vector<Segment> PolygonalSet::edges() const {
    std::vector<Segment> out;
    auto emit = [&out](const Loop& loop) {
        for (size_t i = 0; i < loop.size(); ++i) {
            out.push_back({loop[i], loop[(i + 1) % loop.size()]});
        }
    };
    for (const auto& poly : polygons) {
        emit(poly.outer);
        for (const auto& hole : poly.holes) emit(hole);
    }
    return out;
}

Rational signed_area(const Loop& loop) {
    Rational twice(0);
    for (size_t i = 0; i < loop.size(); ++i) {
        const RatPoint& a = loop[i];
        const RatPoint& b = loop[(i + 1) % loop.size()];
        twice += cross(a, b);
    }
    return twice / 2;
}

Rational area(const PolygonalSet& s) {
    Rational total(0);
    for (const auto& poly : s.polygons) {
        total += signed_area(poly.outer);          // positive (ccw)
        for (const auto& hole : poly.holes) {
            total += signed_area(hole);            // negative (cw)
        }
    }
    return total;
}

namespace {

// Parity ray cast to +x; p must not lie on the loop boundary.
bool loop_contains(const Loop& loop, const RatPoint& p) {
    bool inside = false;
    for (size_t i = 0; i < loop.size(); ++i) {
        const RatPoint& a = loop[i];
        const RatPoint& b = loop[(i + 1) % loop.size()];
        const bool a_above = cmp(a.y, p.y) > 0;
        const bool b_above = cmp(b.y, p.y) > 0;
        if (a_above == b_above) continue;
        // x coordinate of the edge at height p.y
        const Rational t = (p.y - a.y) / (b.y - a.y);
        const Rational xi = a.x + t * (b.x - a.x);
        if (cmp(xi, p.x) > 0) inside = !inside;
    }
    return inside;
}

bool point_on_loop(const Loop& loop, const RatPoint& p) {
    for (size_t i = 0; i < loop.size(); ++i) {
        if (on_segment(p, loop[i], loop[(i + 1) % loop.size()])) return true;
    }
    return false;
}

std::vector<Segment> loop_edges(const Loop& loop) {
    std::vector<Segment> out;
    out.reserve(loop.size());
    for (size_t i = 0; i < loop.size(); ++i) {
        out.push_back({loop[i], loop[(i + 1) % loop.size()]});
    }
    return out;
}

// Drops repeated vertices and collinear pass-through vertices; rejects spikes
// (a vertex where the boundary doubles back on itself along the same line).
Loop canonicalize_loop(Loop loop) {
    // consecutive duplicates, including the wrap pair
    Loop dedup;
    for (const auto& p : loop) {
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();

    Loop out;
    const size_t n = dedup.size();
    if (n < 3) throw ValidationError("loop has fewer than 3 distinct vertices");
    for (size_t i = 0; i < n; ++i) {
        out.push_back(dedup[i]);
        // peel newly-collinear corners as they appear
        while (out.size() >= 3) {
            const RatPoint& a = out[out.size() - 3];
            const RatPoint& b = out[out.size() - 2];
            const RatPoint& c = out[out.size() - 1];
            if (orientation(a, b, c) != 0) break;
            const Rational dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
            if (sgn(dot) <= 0) throw ValidationError("slit edge: boundary doubles back");
            out.erase(out.end() - 2);
        }
    }
    // wrap-around collinearity at the seam
    bool changed = true;
    while (changed && out.size() >= 3) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            if (out.size() < 3) break;
            const size_t m = out.size();
            const RatPoint& a = pass == 0 ? out[m - 2] : out[m - 1];
            const RatPoint& b = pass == 0 ? out[m - 1] : out[0];
            const RatPoint& c = pass == 0 ? out[0] : out[1];
            if (orientation(a, b, c) == 0) {
                const Rational dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
                if (sgn(dot) <= 0) throw ValidationError("slit edge: boundary doubles back");
                out.erase(out.begin() + (pass == 0 ? m - 1 : 0));
                changed = true;
            }
        }
    }
    if (out.size() < 3) throw ValidationError("loop degenerates to fewer than 3 vertices");
    return out;
}

void check_loop_simple(const Loop& loop) {
    const auto edges = loop_edges(loop);
    const size_t n = edges.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const auto ix = intersect_segments(edges[i], edges[j]);
            if (ix.kind == SegmentIntersection::Kind::None) continue;
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent) {
                throw ValidationError("loop is not simple: non-adjacent edges meet");
            }
            if (ix.kind == SegmentIntersection::Kind::Overlap) {
                throw ValidationError("loop is not simple: adjacent edges overlap");
            }
            const RatPoint shared = (j == i + 1) ? edges[i].b : edges[i].a;
            if (!(ix.p == shared)) {
                throw ValidationError("loop is not simple: adjacent edges cross");
            }
        }
    }
}

void rotate_to_min(Loop& loop) {
    auto it = std::min_element(loop.begin(), loop.end());
    std::rotate(loop.begin(), it, loop.end());
}

// Every intersection point of `seg` with the edges of `loop`, as points on seg.
std::vector<RatPoint> cut_points_on(const Segment& seg, const Loop& loop) {
    std::vector<RatPoint> cuts;
    for (const auto& e : loop_edges(loop)) {
        const auto ix = intersect_segments(seg, e);
        if (ix.kind == SegmentIntersection::Kind::Point) {
            cuts.push_back(ix.p);
        } else if (ix.kind == SegmentIntersection::Kind::Overlap) {
            cuts.push_back(ix.q0);
            cuts.push_back(ix.q1);
        }
    }
    return cuts;
}

// Location of a point relative to the closed region bounded by a simple loop.
PointLocation locate_in_loop(const Loop& loop, const RatPoint& p) {
    if (point_on_loop(loop, p)) return PointLocation::Boundary;
    return loop_contains(loop, p) ? PointLocation::Inside : PointLocation::Outside;
}

} // namespace

PointLocation locate_point(const PolygonalSet& s, const RatPoint& p) {
    for (const auto& poly : s.polygons) {
        if (point_on_loop(poly.outer, p)) return PointLocation::Boundary;
        for (const auto& hole : poly.holes) {
            if (point_on_loop(hole, p)) return PointLocation::Boundary;
        }
    }
    for (const auto& poly : s.polygons) {
        if (!loop_contains(poly.outer, p)) continue;
        for (const auto& hole : poly.holes) {
            if (loop_contains(hole, p)) return PointLocation::Outside;
        }
        return PointLocation::Inside;
    }
    return PointLocation::Outside;
}

RatPoint interior_point(const Loop& input) {
    Loop loop = input;
    if (sgn(signed_area(loop)) < 0) std::reverse(loop.begin(), loop.end());
    const size_t n = loop.size();
    const auto edges = loop_edges(loop);

    auto chord_clear = [&](const RatPoint& a, const RatPoint& b) {
        const Segment chord{a, b};
        for (const auto& e : edges) {
            const auto ix = intersect_segments(chord, e);
            if (ix.kind == SegmentIntersection::Kind::None) continue;
            if (ix.kind == SegmentIntersection::Kind::Overlap) return false;
            if (!(ix.p == a) && !(ix.p == b)) return false;
        }
        return true;
    };
    auto triangle_empty = [&](const RatPoint& a, const RatPoint& b, const RatPoint& c) {
        for (const auto& w : loop) {
            if (w == a || w == b || w == c) continue;
            if (orientation(a, b, w) > 0 && orientation(b, c, w) > 0 &&
                orientation(c, a, w) > 0) {
                return false;
            }
        }
        return true;
    };

    // direct ear: strictly convex corner whose chord is unobstructed
    for (size_t i = 0; i < n; ++i) {
        const RatPoint& prev = loop[(i + n - 1) % n];
        const RatPoint& cur = loop[i];
        const RatPoint& next = loop[(i + 1) % n];
        if (orientation(prev, cur, next) <= 0) continue;
        if (!triangle_empty(prev, cur, next)) continue;
        if (!chord_clear(prev, next)) continue;
        return {(prev.x + cur.x + next.x) / 3, (prev.y + cur.y + next.y) / 3};
    }

    // shrink a corner triangle until it clears every foreign feature
    for (size_t i = 0; i < n; ++i) {
        const RatPoint& prev = loop[(i + n - 1) % n];
        const RatPoint& cur = loop[i];
        const RatPoint& next = loop[(i + 1) % n];
        if (orientation(prev, cur, next) <= 0) continue;
        Rational k(2);
        for (int rounds = 0; rounds < 64; ++rounds, k *= 2) {
            const Rational inv = Rational(1) / k;
            const RatPoint a = cur + inv * (prev - cur);
            const RatPoint b = cur + inv * (next - cur);
            if (triangle_empty(a, cur, b) && chord_clear(a, b)) {
                return {(a.x + cur.x + b.x) / 3, (a.y + cur.y + b.y) / 3};
            }
        }
    }
    throw InvariantViolationError("no interior point found for a simple loop");
}

namespace {

void check_hole_placement(const PolygonWithHoles& poly) {
    for (const auto& hole : poly.holes) {
        for (const auto& he : loop_edges(hole)) {
            for (const auto& oe : loop_edges(poly.outer)) {
                if (intersect_segments(he, oe).kind != SegmentIntersection::Kind::None) {
                    throw ValidationError("hole touches the outer boundary");
                }
            }
        }
        for (const auto& v : hole) {
            if (locate_in_loop(poly.outer, v) != PointLocation::Inside) {
                throw ValidationError("hole is not strictly inside its outer loop");
            }
        }
    }
    for (size_t i = 0; i < poly.holes.size(); ++i) {
        for (size_t j = i + 1; j < poly.holes.size(); ++j) {
            for (const auto& a : loop_edges(poly.holes[i])) {
                for (const auto& b : loop_edges(poly.holes[j])) {
                    if (intersect_segments(a, b).kind != SegmentIntersection::Kind::None) {
                        throw ValidationError("holes touch each other");
                    }
                }
            }
            if (locate_in_loop(poly.holes[j], poly.holes[i].front()) != PointLocation::Outside ||
                locate_in_loop(poly.holes[i], poly.holes[j].front()) != PointLocation::Outside) {
                throw ValidationError("holes are nested");
            }
        }
    }
}

PointLocation locate_in_polygon(const PolygonWithHoles& poly, const RatPoint& p) {
    if (point_on_loop(poly.outer, p)) return PointLocation::Boundary;
    for (const auto& hole : poly.holes) {
        if (point_on_loop(hole, p)) return PointLocation::Boundary;
    }
    if (!loop_contains(poly.outer, p)) return PointLocation::Outside;
    for (const auto& hole : poly.holes) {
        if (loop_contains(hole, p)) return PointLocation::Outside;
    }
    return PointLocation::Inside;
}

std::vector<Segment> polygon_boundary_edges(const PolygonWithHoles& poly) {
    auto out = loop_edges(poly.outer);
    for (const auto& hole : poly.holes) {
        const auto he = loop_edges(hole);
        out.insert(out.end(), he.begin(), he.end());
    }
    return out;
}

// Interiors of two validated polygons must be disjoint; shared boundary is
// allowed only back-to-back.
void check_polygons_disjoint(const PolygonWithHoles& p, const PolygonWithHoles& q) {
    const auto pe = polygon_boundary_edges(p);
    const auto qe = polygon_boundary_edges(q);

    for (const auto& a : pe) {
        for (const auto& b : qe) {
            const auto ix = intersect_segments(a, b);
            if (ix.kind == SegmentIntersection::Kind::Point) {
                if (segments_cross_properly(a, b)) {
                    throw ValidationError("polygons overlap: boundaries cross");
                }
            } else if (ix.kind == SegmentIntersection::Kind::Overlap) {
                // with interiors kept to the left, same direction means same side
                const Rational dot = (a.b.x - a.a.x) * (b.b.x - b.a.x) +
                                     (a.b.y - a.a.y) * (b.b.y - b.a.y);
                if (sgn(dot) > 0) {
                    throw ValidationError("polygons overlap along an edge");
                }
            }
        }
    }

    // sample the midpoint of every maximal sub-edge of p against q and back
    auto sample_against = [](const std::vector<Segment>& edges,
                             const Loop& other_outer,
                             const PolygonWithHoles& other) {
        for (const auto& e : edges) {
            std::vector<RatPoint> cuts = cut_points_on(e, other_outer);
            for (const auto& hole : other.holes) {
                auto more = cut_points_on(e, hole);
                cuts.insert(cuts.end(), more.begin(), more.end());
            }
            cuts.push_back(e.a);
            cuts.push_back(e.b);
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            if (e.b < e.a) std::reverse(cuts.begin(), cuts.end());
            for (size_t i = 0; i + 1 < cuts.size(); ++i) {
                const RatPoint mid{(cuts[i].x + cuts[i + 1].x) / 2,
                                   (cuts[i].y + cuts[i + 1].y) / 2};
                if (locate_in_polygon(other, mid) == PointLocation::Inside) {
                    throw ValidationError("polygons overlap");
                }
            }
        }
    };
    sample_against(pe, q.outer, q);
    sample_against(qe, p.outer, p);
}

} // namespace

PolygonalSet make_polygonal_set(std::vector<PolygonWithHoles> raw) {
    if (raw.empty()) throw ValidationError("polygonal set is empty");

    for (auto& poly : raw) {
        poly.outer = canonicalize_loop(std::move(poly.outer));
        check_loop_simple(poly.outer);
        if (sgn(signed_area(poly.outer)) < 0) {
            std::reverse(poly.outer.begin(), poly.outer.end());
        }
        rotate_to_min(poly.outer);
        for (auto& hole : poly.holes) {
            hole = canonicalize_loop(std::move(hole));
            check_loop_simple(hole);
            if (sgn(signed_area(hole)) > 0) {
                std::reverse(hole.begin(), hole.end());
            }
            rotate_to_min(hole);
        }
        std::sort(poly.holes.begin(), poly.holes.end(),
                  [](const Loop& a, const Loop& b) { return a.front() < b.front(); });
        check_hole_placement(poly);
    }

    for (size_t i = 0; i < raw.size(); ++i) {
        for (size_t j = i + 1; j < raw.size(); ++j) {
            check_polygons_disjoint(raw[i], raw[j]);
        }
    }

    std::sort(raw.begin(), raw.end(), [](const PolygonWithHoles& a, const PolygonWithHoles& b) {
        return a.outer.front() < b.outer.front();
    });

    PolygonalSet set{std::move(raw)};
    if (sgn(area(set)) <= 0) throw ValidationError("polygonal set has zero area");
    return set;
}

std::vector<IVec> IntegerPolygonalSet::ivertices() const {
    std::vector<IVec> out;
    for (const auto& v : base.vertices()) {
        out.push_back({rational_to_int64(v.x), rational_to_int64(v.y)});
    }
    return out;
}

std::vector<std::pair<IVec, IVec>> IntegerPolygonalSet::iedges() const {
    std::vector<std::pair<IVec, IVec>> out;
    for (const auto& e : base.edges()) {
        out.push_back({{rational_to_int64(e.a.x), rational_to_int64(e.a.y)},
                       {rational_to_int64(e.b.x), rational_to_int64(e.b.y)}});
    }
    return out;
}

std::pair<IVec, IVec> IntegerPolygonalSet::bounding_box() const {
    const auto vs = ivertices();
    IVec lo = vs.front(), hi = vs.front();
    for (const auto& v : vs) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
    return {lo, hi};
}

IntegerPolygonalSet as_integer_set(PolygonalSet s) {
    bool origin_seen = false;
    for (const auto& v : s.vertices()) {
        if (!is_integer(v.x) || !is_integer(v.y)) {
            throw ValidationError("vertex is not integral: (" + rational_to_string(v.x) +
                                  ", " + rational_to_string(v.y) + ")");
        }
        if (sgn(v.x) == 0 && sgn(v.y) == 0) origin_seen = true;
    }
    if (!origin_seen) throw ValidationError("integer set must have (0,0) as a vertex");
    return IntegerPolygonalSet{std::move(s)};
}

std::pair<IntegerPolygonalSet, AffineNormalization>
normalize_to_integer(const PolygonalSet& s) {
    const auto vs = s.vertices();
    RatPoint translation = vs.front();
    for (const auto& v : vs) {
        if (v < translation) translation = v;
    }

    Integer dil(1);
    for (const auto& v : vs) {
        const Rational dx = v.x - translation.x;
        const Rational dy = v.y - translation.y;
        mpz_lcm(dil.get_mpz_t(), dil.get_mpz_t(), dx.get_den().get_mpz_t());
        mpz_lcm(dil.get_mpz_t(), dil.get_mpz_t(), dy.get_den().get_mpz_t());
    }
    const Rational scale(dil);

    std::vector<PolygonWithHoles> scaled;
    for (const auto& poly : s.polygons) {
        PolygonWithHoles out;
        auto map_loop = [&](const Loop& loop) {
            Loop m;
            m.reserve(loop.size());
            for (const auto& p : loop) m.push_back(scale * (p - translation));
            return m;
        };
        out.outer = map_loop(poly.outer);
        for (const auto& hole : poly.holes) out.holes.push_back(map_loop(hole));
        scaled.push_back(std::move(out));
    }

    auto integer = as_integer_set(make_polygonal_set(std::move(scaled)));
    return {std::move(integer), AffineNormalization{translation, dil}};
}

} // namespace polytile
