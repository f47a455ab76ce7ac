#pragma once

#include "polytile/discrete_tile.hpp"
#include "polytile/tiling_desc.hpp"

#include <optional>

namespace polytile {

// Certificate for a periodic discrete tiling: a fundamental-domain patch with
// periodic boundary conditions.
struct TorusTiling {
    Lattice lattice;
    std::vector<IVec> translates; // reduced to the fundamental domain, sorted

    TilingDesc as_desc() const;
};

// Independent certificate checker: counts, for every point of one quotient,
// how many translates cover it. Shares no code with the search.
bool verify_tiling(const std::vector<IVec>& tile_points, const TorusTiling& t);

// Same naive counting for a general integral description.
bool verify_tiling(const std::vector<IVec>& tile_points, const TilingDesc& desc);

} // namespace polytile
