#pragma once

#include "polytile/lattice.hpp"
#include "polytile/tiling_desc.hpp"

#include <vector>

namespace polytile {

// One family of tectonic plates: a connected component of the coverage
// linkage graph on the quotient, together with its displacement subgroup H.
// The plates of the family are the H-cosets of the lifted component.
struct PlateFamily {
    std::vector<IVec> nodes; // lifted translates (node + tree displacement)
    Subgroup h;              // generated by cycle displacements
    long long plate_count = 0; // [lattice : H]; -1 when infinite
};

struct EarthquakeDecomposition {
    Lattice lattice;
    IVec direction{0, 0};
    std::vector<PlateFamily> families;
    long long total_plates = 0; // -1 when infinite
};

// Links t -> t' when the shifted copy (tile + t +- v) meets (tile + t');
// plates are the connected components of the linkage, computed on the
// quotient graph with displacement tracking. Every plate's covered set is
// Z v-periodic by construction, and no proper relation-closed subset is.
EarthquakeDecomposition earthquake_decomposition(const std::vector<IVec>& tile_points,
                                                 const IntPeriodic& tiling, IVec v);

// All translates of the described tiling inside the closed box, grouped by
// plate, deterministically ordered. Convenience for windowed checks.
std::vector<std::vector<IVec>> plates_on_window(const EarthquakeDecomposition& decomp,
                                                const IntPeriodic& tiling,
                                                IVec window_lo, IVec window_hi);

} // namespace polytile
