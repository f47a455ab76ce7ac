#pragma once

#include "polytile/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace polytile {

// Exact rational point / vector. Ordered lexicographically (x, then y).
struct RatPoint {
    Rational x;
    Rational y;

    RatPoint() : x(0), y(0) {}
    RatPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    RatPoint(long long px, long long py) : x(rat_of(px)), y(rat_of(py)) {}

    friend RatPoint operator+(const RatPoint& a, const RatPoint& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend RatPoint operator-(const RatPoint& a, const RatPoint& b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend RatPoint operator*(const Rational& s, const RatPoint& p) {
        return {s * p.x, s * p.y};
    }
    friend bool operator==(const RatPoint& a, const RatPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const RatPoint& a, const RatPoint& b) { return !(a == b); }
    friend bool operator<(const RatPoint& a, const RatPoint& b) {
        const int cx = cmp(a.x, b.x);
        if (cx != 0) return cx < 0;
        return cmp(a.y, b.y) < 0;
    }
};

// Integer lattice point / vector (machine range is plenty at desk scale).
struct IVec {
    long long x = 0;
    long long y = 0;

    friend IVec operator+(IVec a, IVec b) { return {a.x + b.x, a.y + b.y}; }
    friend IVec operator-(IVec a, IVec b) { return {a.x - b.x, a.y - b.y}; }
    friend IVec operator-(IVec a) { return {-a.x, -a.y}; }
    friend IVec operator*(long long s, IVec a) { return {s * a.x, s * a.y}; }
    friend auto operator<=>(const IVec&, const IVec&) = default;
};

struct IVecHash {
    size_t operator()(const IVec& v) const {
        const uint64_t a = static_cast<uint64_t>(v.x) * 0x9e3779b97f4a7c15ULL;
        const uint64_t b = static_cast<uint64_t>(v.y) * 0xc2b2ae3d27d4eb4fULL;
        return static_cast<size_t>(a ^ (b + (a << 6) + (a >> 2)));
    }
};

inline RatPoint to_rat(IVec v) { return RatPoint(v.x, v.y); }

struct Segment {
    RatPoint a;
    RatPoint b;
};

// Sign of the cross product (b - a) x (c - a): >0 left turn, <0 right, 0 collinear.
int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c);

Rational cross(const RatPoint& a, const RatPoint& b);

// True when p lies on the closed segment [a, b].
bool on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b);

struct SegmentIntersection {
    enum class Kind { None, Point, Overlap } kind = Kind::None;
    RatPoint p;       // Kind::Point
    RatPoint q0, q1;  // Kind::Overlap endpoints, q0 < q1
};

SegmentIntersection intersect_segments(const Segment& s, const Segment& t);

// True when the intersection point is interior to both segments (a proper crossing).
bool segments_cross_properly(const Segment& s, const Segment& t);

} // namespace polytile
