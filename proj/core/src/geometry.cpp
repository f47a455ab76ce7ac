#include "polytile/geometry.hpp"

#include <algorithm>

namespace polytile {

Rational cross(const RatPoint& a, const RatPoint& b) {
    return a.x * b.y - a.y * b.x;
}

int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    return sign_of(cross(b - a, c - a));
}

bool on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
    if (orientation(a, b, p) != 0) return false;
    return cmp(std::min(a.x, b.x), p.x) <= 0 && cmp(p.x, std::max(a.x, b.x)) <= 0 &&
           cmp(std::min(a.y, b.y), p.y) <= 0 && cmp(p.y, std::max(a.y, b.y)) <= 0;
}

namespace {

// Order along the direction of a collinear family: projects onto the dominant axis.
bool ahead(const RatPoint& a, const RatPoint& b) { return b < a; }

} // namespace

SegmentIntersection intersect_segments(const Segment& s, const Segment& t) {
    SegmentIntersection out;
    const RatPoint r = s.b - s.a;
    const RatPoint q = t.b - t.a;
    const Rational denom = cross(r, q);
    const RatPoint diff = t.a - s.a;

    if (sgn(denom) != 0) {
        // Lines cross in a single point; check it lies on both closed segments.
        const Rational u = cross(diff, q) / denom; // parameter on s
        const Rational v = cross(diff, r) / denom; // parameter on t
        if (sgn(u) < 0 || cmp(u, 1) > 0 || sgn(v) < 0 || cmp(v, 1) > 0) {
            return out;
        }
        out.kind = SegmentIntersection::Kind::Point;
        out.p = s.a + RatPoint(u * r.x, u * r.y);
        return out;
    }

    if (sgn(cross(diff, r)) != 0) {
        return out; // parallel, distinct lines
    }

    // Collinear: intersect the two parameter intervals on s's line.
    RatPoint lo1 = s.a, hi1 = s.b;
    if (ahead(lo1, hi1)) std::swap(lo1, hi1);
    RatPoint lo2 = t.a, hi2 = t.b;
    if (ahead(lo2, hi2)) std::swap(lo2, hi2);
    const RatPoint lo = std::max(lo1, lo2);
    const RatPoint hi = std::min(hi1, hi2);
    if (hi < lo) return out;
    if (lo == hi) {
        out.kind = SegmentIntersection::Kind::Point;
        out.p = lo;
        return out;
    }
    out.kind = SegmentIntersection::Kind::Overlap;
    out.q0 = lo;
    out.q1 = hi;
    return out;
}

bool segments_cross_properly(const Segment& s, const Segment& t) {
    const auto ix = intersect_segments(s, t);
    if (ix.kind != SegmentIntersection::Kind::Point) return false;
    const RatPoint& p = ix.p;
    auto interior = [&p](const Segment& seg) {
        return p != seg.a && p != seg.b;
    };
    return interior(s) && interior(t);
}

} // namespace polytile
