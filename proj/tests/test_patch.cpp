#include "polytile/patch.hpp"

#include "polytile/discrete_tile.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <set>

using namespace polytile;

namespace {

// 1-D oracle for horizontal row tiles: can translates of `offsets` cover
// [-r, r] exactly once without overlapping anywhere on the line?
bool row_coverable(const std::vector<long long>& offsets, long long r) {
    std::set<long long> occupied;
    std::function<bool(long long)> go = [&](long long next) -> bool {
        while (next <= r && occupied.count(next)) ++next;
        if (next > r) return true;
        for (const long long f : offsets) {
            const long long u = next - f;
            bool ok = true;
            for (const long long g : offsets) {
                if (occupied.count(u + g)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (const long long g : offsets) occupied.insert(u + g);
            if (go(next)) return true;
            for (const long long g : offsets) occupied.erase(u + g);
        }
        return false;
    };
    return go(-r);
}

} // namespace

TEST_CASE("the gapped row tile fails at radius 2 and not before") {
    // oracle first: {0,1,3} covers [-1,1] but not [-2,2]
    REQUIRE(row_coverable({0, 1, 3}, 1));
    REQUIRE(!row_coverable({0, 1, 3}, 2));

    const std::vector<IVec> row = {{0, 0}, {1, 0}, {3, 0}};
    const auto r1 = patch_tileable(row, 1);
    CHECK(r1.coverable);
    const auto r2 = patch_tileable(row, 2);
    CHECK(!r2.coverable);
}

TEST_CASE("refutations are monotone in the radius") {
    const std::vector<IVec> row = {{0, 0}, {1, 0}, {3, 0}};
    CHECK(!patch_tileable(row, 3).coverable);
}

TEST_CASE("the encoded unit square covers small cores") {
    const auto d = discretize(corpus::unit_square());
    for (long long r = 1; r <= 3; ++r) {
        const auto res = patch_tileable(d.tile.points, r);
        CHECK(res.coverable);
    }
}

TEST_CASE("witnesses cover the core exactly once and never overlap") {
    const auto d = discretize(corpus::unit_square());
    const long long r = 2;
    const auto res = patch_tileable(d.tile.points, r);
    REQUIRE(res.coverable);

    std::set<IVec> seen;
    long long core_hits = 0;
    for (const auto& u : res.witness) {
        for (const auto& f : d.tile.points) {
            const IVec p = f + u;
            CHECK(seen.insert(p).second); // no overlap anywhere
            if (-r <= p.x && p.x <= r && -r <= p.y && p.y <= r) ++core_hits;
        }
    }
    CHECK(core_hits == (2 * r + 1) * (2 * r + 1));
}
