#pragma once

#include "polytile/tiling_desc.hpp"

#include <vector>

namespace polytile {

// Exact invariance check S + h = S, decided from the description algebra.
bool check_periodicity(const TilingDesc& desc, const RatPoint& h);
bool check_periodicity(const Component& comp, const RatPoint& h);

struct PeriodicityReport {
    enum class Kind { NotPeriodic, SinglyPeriodic, WeaklyPeriodic, DoublyPeriodic };
    Kind kind = Kind::NotPeriodic;

    std::vector<RatPoint> periods; // 1 for singly, 2 for doubly

    struct Piece {
        Component piece;
        RatPoint period;
    };
    std::vector<Piece> pieces; // weakly periodic decomposition
};

// Classifies the described set: two independent verified periods make it
// doubly periodic; otherwise one verified global period, otherwise a
// partition into singly-periodic pieces. Every reported period is re-verified
// through check_periodicity.
PeriodicityReport weak_periodic_report(const TilingDesc& desc);

} // namespace polytile
