#pragma once

#include "polytile/lattice.hpp"

#include <string>
#include <vector>

namespace polytile {

// One orbit family of translates: base points swept by one or two independent
// period vectors. slide_offset records how far the component was slid along
// the global direction (bookkeeping for sheared tilings).
struct Component {
    std::vector<RatPoint> base;
    std::vector<RatPoint> periods; // size 1 or 2
    Rational slide_offset = Rational(0);

    bool contains(const RatPoint& p) const;
    int rank() const { return static_cast<int>(periods.size()); }
};

// Finite description of a translate set: either base (+) lattice, or a finite
// union of components sharing a slide direction.
struct TilingDesc {
    enum class Kind { Periodic, Sheared };
    Kind kind = Kind::Periodic;

    // Periodic
    std::vector<RatPoint> base;
    RatLattice lattice;

    // Sheared
    std::vector<Component> components;
    IVec direction{0, 1};

    bool contains(const RatPoint& p) const;
    bool is_integral() const;
    // Least q >= 1 with q * T described over Z^2.
    long long denominator() const;
    TilingDesc scaled(long long q) const;

    static TilingDesc periodic(std::vector<RatPoint> base, RatLattice lattice);
    static TilingDesc sheared(std::vector<Component> comps, IVec direction);
    // Z^2 itself.
    static TilingDesc integer_grid();
};

// Integer view of a periodic description (throws unless integral periodic).
struct IntPeriodic {
    std::vector<IVec> base; // reduced mod lattice, sorted, unique
    Lattice lattice;
};
IntPeriodic int_periodic_view(const TilingDesc& desc);

TilingDesc parse_tiling_desc(const std::string& text);
std::string serialize_tiling_desc(const TilingDesc& desc);

} // namespace polytile
