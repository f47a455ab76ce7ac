#include "polytile/verify.hpp"

#include "polytile/errors.hpp"
#include "polytile/lift.hpp"

#include <algorithm>
#include <set>

namespace polytile {

TilingDesc TorusTiling::as_desc() const {
    std::vector<RatPoint> base;
    base.reserve(translates.size());
    for (const auto& t : translates) base.push_back(to_rat(t));
    return TilingDesc::periodic(std::move(base), RatLattice{lattice, 1});
}

bool verify_tiling(const std::vector<IVec>& tile_points, const TorusTiling& t) {
    if (t.translates.empty()) return false;
    std::set<IVec> marks;
    for (const auto& u : t.translates) {
        marks.insert(t.lattice.reduce(u));
    }
    if (marks.size() != t.translates.size()) return false;

    for (long long y = 0; y < t.lattice.d; ++y) {
        for (long long x = 0; x < t.lattice.a; ++x) {
            long long covered = 0;
            for (const auto& f : tile_points) {
                if (marks.count(t.lattice.reduce(IVec{x, y} - f))) ++covered;
            }
            if (covered != 1) return false;
        }
    }
    return true;
}

bool verify_tiling(const std::vector<IVec>& tile_points, const TilingDesc& desc) {
    if (!desc.is_integral()) return false;
    Lattice lam;
    try {
        lam = invariance_lattice(desc);
    } catch (const Error&) {
        return false;
    }
    for (long long y = 0; y < lam.d; ++y) {
        for (long long x = 0; x < lam.a; ++x) {
            long long covered = 0;
            for (const auto& f : tile_points) {
                if (desc.contains(to_rat(IVec{x, y} - f))) ++covered;
            }
            if (covered != 1) return false;
        }
    }
    return true;
}

} // namespace polytile
