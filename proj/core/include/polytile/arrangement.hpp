#pragma once

#include "polytile/markers.hpp"
#include "polytile/polygon.hpp"

#include <vector>

namespace polytile {

// One open 2-cell of the arrangement of edge translates inside the unit square.
struct Face {
    Loop boundary;          // simple counterclockwise loop
    RatPoint representative; // strictly interior, off every arrangement segment
    Rational face_area;
};

// The unit square cut by all integer translates of the edge set, together
// with the derived grid parameters.
struct UnitCellPartition {
    std::vector<Face> faces; // sorted by representative point
    int face_count = 0;      // M
    int k = 0;
    int n = 0;               // N = 3k + 4

    const Face& face(int i) const { return faces[static_cast<size_t>(i)]; }
};

UnitCellPartition unit_cell_partition(const IntegerPolygonalSet& omega);

// Exact arrangement machinery, exposed for reuse and testing: splits the
// input segments at every pairwise intersection and returns the positive-area
// faces of the resulting planar subdivision.
struct ArrangementFace {
    Loop boundary;
    Rational face_area;
};
std::vector<ArrangementFace> arrangement_faces(const std::vector<Segment>& segments);

// All integer translates of the edges of omega clipped to the unit square,
// plus the square border itself.
std::vector<Segment> unit_cell_segments(const IntegerPolygonalSet& omega);

} // namespace polytile
