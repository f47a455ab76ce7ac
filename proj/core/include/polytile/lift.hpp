#pragma once

#include "polytile/discrete_tile.hpp"
#include "polytile/tiling_desc.hpp"

namespace polytile {

struct LiftVerdict {
    bool ok = false;
    IVec witness_cell{0, 0}; // when !ok: the cell and face with bad coverage
    int witness_face = 0;
    long long coverage = 0;  // 0 = uncovered, >= 2 = overlap

    std::string to_string() const;
};

// Exact continuous tiling check by face occupancy: T (a subset of Z^2
// containing the origin) tiles the plane by omega iff every (cell, face)
// pair is covered by exactly one translate. Coverage is invariant under the
// description's lattice, so checking one quotient decides the whole plane.
// Throws WindowTooSmall when the description has no full-rank invariance.
LiftVerdict lift_tiling(const IntegerPolygonalSet& omega, const UnitCellPartition& part,
                        const TilingDesc& desc);

// Same check for arbitrary rational descriptions (no origin requirement):
// scales set and description to the integers first.
LiftVerdict verify_continuous_tiling(const IntegerPolygonalSet& omega,
                                     const TilingDesc& desc);

// Full-rank lattice leaving the described set invariant, derived from the
// description (integral descriptions only).
Lattice invariance_lattice(const TilingDesc& desc);

} // namespace polytile
