#pragma once

#include "polytile/geometry.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace polytile {

// A closed vertex loop; the edge from back() to front() is implicit.
using Loop = std::vector<RatPoint>;

struct PolygonWithHoles {
    Loop outer;              // counterclockwise after canonicalization
    std::vector<Loop> holes; // clockwise after canonicalization
};

// A bounded open region with rational vertices: finitely many simple polygons
// with holes, pairwise interior-disjoint. Construct through make_polygonal_set
// so the invariants (simplicity, canonical orientation, minimal edge
// decomposition, positive area) always hold.
struct PolygonalSet {
    std::vector<PolygonWithHoles> polygons;

    std::vector<RatPoint> vertices() const; // V: every loop vertex
    std::vector<Segment> edges() const;     // E: every loop edge
};

enum class PointLocation { Inside, Outside, Boundary };

// Validates and canonicalizes; throws ValidationError with a reason on
// self-intersection, slit edges, overlapping polygons, misplaced holes,
// or zero area.
PolygonalSet make_polygonal_set(std::vector<PolygonWithHoles> raw);

Rational signed_area(const Loop& loop);
Rational area(const PolygonalSet& s);

PointLocation locate_point(const PolygonalSet& s, const RatPoint& p);

// Point strictly inside the region bounded by a simple loop (orientation-free).
RatPoint interior_point(const Loop& loop);

// A polygonal set with all vertices in Z^2 and (0,0) among them.
struct IntegerPolygonalSet {
    PolygonalSet base;

    std::vector<IVec> ivertices() const;
    std::vector<std::pair<IVec, IVec>> iedges() const;
    // Closed integer bounding box [min, max] of the vertex set.
    std::pair<IVec, IVec> bounding_box() const;
};

struct AffineNormalization {
    RatPoint translation; // lexicographically smallest vertex of the source
    Integer dilation;     // positive; x -> dilation * (x - translation)
};

// Translates the lexicographically smallest vertex to the origin and dilates
// by the least common multiple of all coordinate denominators.
std::pair<IntegerPolygonalSet, AffineNormalization>
normalize_to_integer(const PolygonalSet& s);

// Wraps an already-integer set; throws ValidationError if a vertex is not
// integral or (0,0) is missing from the vertex set.
IntegerPolygonalSet as_integer_set(PolygonalSet s);

} // namespace polytile
