#pragma once

#include "polytile/discrete_tile.hpp"
#include "polytile/earthquake.hpp"
#include "polytile/tiling_desc.hpp"

#include <string>

namespace polytile {

// Deterministic SVG output: identical input produces identical bytes.
struct RenderOptions {
    long long cell_pixels = 48; // pixels per unit length
};

std::string render_polygon_svg(const PolygonalSet& s, const RenderOptions& opt = {});

// Unit cell faces colored by index (face 0 grey, then green, orange, blue...).
std::string render_partition_svg(const UnitCellPartition& part,
                                 const RenderOptions& opt = {});

// Each tile point (a, b) drawn as the square (a, b) + [0, 1]^2 of the scaled
// grid, colored by the marker set it came from when markers are available.
std::string render_discrete_tile_svg(const Discretization& d,
                                     const RenderOptions& opt = {});
std::string render_discrete_tile_svg(const DiscreteTile& tile,
                                     const RenderOptions& opt = {});

// Translated copies of the set over a window of the described tiling.
std::string render_tiling_svg(const PolygonalSet& s, const TilingDesc& desc,
                              IVec window_lo, IVec window_hi,
                              const RenderOptions& opt = {});

// Discrete tiling window with translates colored by plate.
std::string render_plates_svg(const std::vector<IVec>& tile_points,
                              const IntPeriodic& tiling,
                              const EarthquakeDecomposition& decomp,
                              IVec window_lo, IVec window_hi,
                              const RenderOptions& opt = {});

} // namespace polytile
