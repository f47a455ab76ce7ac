#include "polytile/lift.hpp"

#include "polytile/errors.hpp"

#include <sstream>

namespace polytile {

std::string LiftVerdict::to_string() const {
    if (ok) return "tiling";
    std::ostringstream out;
    out << (coverage == 0 ? "uncovered" : "overlapped") << " cell (" << witness_cell.x
        << "," << witness_cell.y << ") face " << witness_face;
    if (coverage >= 2) out << " covered " << coverage << " times";
    return out.str();
}

Lattice invariance_lattice(const TilingDesc& desc) {
    if (desc.kind == TilingDesc::Kind::Periodic) {
        if (desc.lattice.den != 1) {
            throw UnsupportedDescriptionError("description lattice is not integral");
        }
        return desc.lattice.num;
    }
    std::optional<Lattice> acc;
    for (const auto& c : desc.components) {
        if (c.rank() != 2) {
            throw WindowTooSmallError(
                "component with a single period has no finite verification window");
        }
        const RatLattice rl = rat_lattice_from_generators(c.periods);
        if (rl.den != 1) {
            throw UnsupportedDescriptionError("component lattice is not integral");
        }
        acc = acc ? intersect(*acc, rl.num) : rl.num;
    }
    if (!acc) throw UnsupportedDescriptionError("empty description");
    return *acc;
}

namespace {

// cells v with (v + face_i) inside omega, per face
std::vector<std::vector<IVec>> occupancy_profile(const IntegerPolygonalSet& omega,
                                                 const UnitCellPartition& part) {
    std::vector<std::vector<IVec>> occ(static_cast<size_t>(part.face_count));
    const auto [lo, hi] = omega.bounding_box();
    for (long long cy = lo.y; cy < hi.y; ++cy) {
        for (long long cx = lo.x; cx < hi.x; ++cx) {
            for (int i = 0; i < part.face_count; ++i) {
                if (cell_occupancy(omega, part, {cx, cy}, i)) {
                    occ[static_cast<size_t>(i)].push_back({cx, cy});
                }
            }
        }
    }
    return occ;
}

LiftVerdict check_cover(const IntegerPolygonalSet& omega, const UnitCellPartition& part,
                        const TilingDesc& desc) {
    const Lattice lam = invariance_lattice(desc);
    const auto occ = occupancy_profile(omega, part);

    for (const auto& v : coset_representatives(lam)) {
        for (int i = 0; i < part.face_count; ++i) {
            long long covered = 0;
            for (const auto& w : occ[static_cast<size_t>(i)]) {
                if (desc.contains(to_rat(v - w))) ++covered;
            }
            if (covered != 1) {
                return {false, v, i, covered};
            }
        }
    }
    return {true, {0, 0}, 0, 1};
}

} // namespace

LiftVerdict lift_tiling(const IntegerPolygonalSet& omega, const UnitCellPartition& part,
                        const TilingDesc& desc) {
    if (!desc.is_integral()) {
        throw ValidationError("lift requires a description over Z^2");
    }
    if (!desc.contains(RatPoint(0, 0))) {
        throw ValidationError("lift requires the origin in the translate set");
    }
    return check_cover(omega, part, desc);
}

LiftVerdict verify_continuous_tiling(const IntegerPolygonalSet& omega,
                                     const TilingDesc& desc) {
    const long long q = desc.denominator();
    if (q == 1) {
        return check_cover(omega, unit_cell_partition(omega), desc);
    }
    // dilate everything by q so the description lands in Z^2
    std::vector<PolygonWithHoles> scaled;
    const Rational s = rat_of(q);
    for (const auto& poly : omega.base.polygons) {
        PolygonWithHoles out;
        auto map_loop = [&](const Loop& loop) {
            Loop m;
            for (const auto& p : loop) m.push_back(s * p);
            return m;
        };
        out.outer = map_loop(poly.outer);
        for (const auto& h : poly.holes) out.holes.push_back(map_loop(h));
        scaled.push_back(std::move(out));
    }
    const auto omega_q = as_integer_set(make_polygonal_set(std::move(scaled)));
    return check_cover(omega_q, unit_cell_partition(omega_q), desc.scaled(q));
}

} // namespace polytile
