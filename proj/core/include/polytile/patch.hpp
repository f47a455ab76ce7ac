#pragma once

#include "polytile/geometry.hpp"

#include <optional>
#include <vector>

namespace polytile {

struct PatchResult {
    bool coverable = false;
    // When coverable: translate set covering the core exactly once with no
    // overlap anywhere.
    std::vector<IVec> witness;
};

// Exhaustive backtracking over translate placements: every cell of the core
// square [-radius, radius]^2 must be covered exactly once and no two
// placements may overlap anywhere (overhang beyond the core is fine).
// A negative answer certifies that no cover of this core exists.
PatchResult patch_tileable(const std::vector<IVec>& tile_points, long long radius);

} // namespace polytile
