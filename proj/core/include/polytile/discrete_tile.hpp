#pragma once

#include "polytile/arrangement.hpp"

#include <string>
#include <string_view>

namespace polytile {

// Finite subset of Z^2 together with the grid scale: the encoded tile is
// points / scale inside (1/scale) Z^2.
struct DiscreteTile {
    long long scale = 1;
    std::vector<IVec> points; // sorted lexicographically, unique

    std::pair<IVec, IVec> bounding_box() const;
};

// True when cell + face lies inside omega (the face is either wholly inside
// or wholly outside, so the representative point decides).
bool cell_occupancy(const IntegerPolygonalSet& omega, const UnitCellPartition& part,
                    IVec cell, int face_index);

// The full pipeline output: partition, markers and the encoded tile.
struct Discretization {
    UnitCellPartition partition;
    std::vector<MarkerSet> markers;
    DiscreteTile tile;
};

Discretization discretize(const IntegerPolygonalSet& omega);

// Text format: "scale N" then one "x y" pair per line, sorted.
std::string tile_to_text(const DiscreteTile& tile);
DiscreteTile tile_from_text(std::string_view text);

} // namespace polytile
