#pragma once

#include "polytile/geometry.hpp"

#include <vector>

namespace polytile {

// Marker pattern for one partition face: an 8-point ring for i >= 1, and for
// i = 0 the remainder of the N x N grid with the two out-of-square anchors
// (N,1),(1,N) swapped in for (0,1),(1,0).
struct MarkerSet {
    int index = 0;
    std::vector<IVec> points; // sorted lexicographically
};

// k = smallest positive integer with M <= k^2; N = 3k + 4.
struct GridParameters {
    int k = 0;
    int n = 0;
};
GridParameters compute_parameters(int face_count);

std::vector<MarkerSet> build_marker_sets(int face_count, int k, int n);

} // namespace polytile
