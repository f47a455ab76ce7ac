#pragma once

#include "polytile/verify.hpp"

namespace polytile {

enum class TorusOutcome {
    Tiled,        // exact cover found; certificate attached
    NoCover,      // search exhausted without a cover
    NotDivisible, // |tile| does not divide the lattice index
    Collapsed,    // two tile points congruent mod the lattice
};

struct TorusResult {
    TorusOutcome outcome = TorusOutcome::NoCover;
    std::optional<TorusTiling> tiling;
};

// Exact cover of Z^2 / lattice by the reduced tile. Deterministic: branches
// on the uncovered cell with the fewest usable placements and tries
// placements in lexicographic order, so the first cover found is a fixed
// function of the input.
TorusResult tile_torus(const std::vector<IVec>& tile_points, const Lattice& lat);

} // namespace polytile
