#include "polytile/markers.hpp"

#include "polytile/errors.hpp"

#include <algorithm>
#include <set>

namespace polytile {

GridParameters compute_parameters(int face_count) {
    if (face_count < 1) throw InvariantViolationError("face count must be positive");
    int k = 1;
    while (static_cast<long long>(k) * k < face_count) ++k;
    return {k, 3 * k + 4};
}

std::vector<MarkerSet> build_marker_sets(int face_count, int k, int n) {
    if (face_count > k * k || n != 3 * k + 4) {
        throw InvariantViolationError("inconsistent grid parameters");
    }

    std::vector<MarkerSet> sets(static_cast<size_t>(face_count));
    std::set<IVec> taken;

    for (int i = 1; i < face_count; ++i) {
        const long long ai = i % k + 1;
        const long long bi = i / k + 1;
        MarkerSet& s = sets[static_cast<size_t>(i)];
        s.index = i;
        for (long long dy = -1; dy <= 1; ++dy) {
            for (long long dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const IVec p{3 * ai + dx, 3 * bi + dy};
                s.points.push_back(p);
                taken.insert(p);
            }
        }
        std::sort(s.points.begin(), s.points.end());
    }

    MarkerSet& s0 = sets[0];
    s0.index = 0;
    for (long long x = 0; x < n; ++x) {
        for (long long y = 0; y < n; ++y) {
            const IVec p{x, y};
            if (taken.count(p)) continue;
            if ((p.x == 0 && p.y == 1) || (p.x == 1 && p.y == 0)) continue;
            s0.points.push_back(p);
        }
    }
    s0.points.push_back({n, 1});
    s0.points.push_back({1, n});
    std::sort(s0.points.begin(), s0.points.end());
    return sets;
}

} // namespace polytile
