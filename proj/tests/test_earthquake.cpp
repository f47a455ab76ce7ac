#include "polytile/earthquake.hpp"

#include "polytile/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace polytile;

namespace {

long long floordiv(long long x, long long y) {
    long long q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

struct Key {
    int family = -1;
    IVec coset{0, 0};
    friend auto operator<=>(const Key&, const Key&) = default;
};

// plate identity of a translate, reconstructed from the decomposition
Key key_of(const EarthquakeDecomposition& decomp, const IntPeriodic& tiling, IVec t) {
    const IVec r = tiling.lattice.reduce(t);
    for (size_t f = 0; f < decomp.families.size(); ++f) {
        for (const auto& lifted : decomp.families[f].nodes) {
            if (tiling.lattice.reduce(lifted) == r) {
                const IVec w = t - lifted;
                const Subgroup& h = decomp.families[f].h;
                IVec coset = w;
                if (h.rank == 1) {
                    const IVec g = h.gen1;
                    const long long k = (g.y != 0) ? floordiv(w.y, g.y) : floordiv(w.x, g.x);
                    coset = w - k * g;
                } else if (h.rank == 2) {
                    coset = h.full->reduce(w);
                }
                return {static_cast<int>(f), coset};
            }
        }
    }
    return {};
}

bool in_tiling(const IntPeriodic& tiling, IVec t) {
    const IVec r = tiling.lattice.reduce(t);
    return std::binary_search(tiling.base.begin(), tiling.base.end(), r);
}

// does the plate's covered set contain p?
bool plate_covers(const EarthquakeDecomposition& decomp, const IntPeriodic& tiling,
                  const std::vector<IVec>& tile, const Key& plate, IVec p) {
    for (const auto& f : tile) {
        const IVec t = p - f;
        if (in_tiling(tiling, t) && key_of(decomp, tiling, t) == plate) return true;
    }
    return false;
}

void check_plate_invariance(const std::vector<IVec>& tile, const IntPeriodic& tiling,
                            const EarthquakeDecomposition& decomp, IVec v, IVec lo,
                            IVec hi) {
    const auto window_plates = plates_on_window(decomp, tiling, lo, hi);
    std::set<Key> keys;
    for (const auto& plate : window_plates) {
        keys.insert(key_of(decomp, tiling, plate.front()));
    }
    for (const auto& key : keys) {
        for (long long y = lo.y; y <= hi.y; ++y) {
            for (long long x = lo.x; x <= hi.x; ++x) {
                const bool here = plate_covers(decomp, tiling, tile, key, {x, y});
                const bool there = plate_covers(decomp, tiling, tile, key, IVec{x, y} + v);
                CHECK(here == there);
            }
        }
    }
}

void check_plate_partition(const IntPeriodic& tiling, const EarthquakeDecomposition& decomp,
                           IVec lo, IVec hi) {
    const auto window_plates = plates_on_window(decomp, tiling, lo, hi);
    std::set<IVec> seen;
    size_t total = 0;
    for (const auto& plate : window_plates) {
        for (const auto& t : plate) {
            CHECK(seen.insert(t).second);
            ++total;
        }
    }
    size_t expect = 0;
    for (long long y = lo.y; y <= hi.y; ++y) {
        for (long long x = lo.x; x <= hi.x; ++x) {
            if (in_tiling(tiling, {x, y})) ++expect;
        }
    }
    CHECK(total == expect);
}

// every proper nonempty subset of a window plate leaks a linkage edge
void check_plate_minimality(const std::vector<IVec>& tile, const IntPeriodic& tiling,
                            const EarthquakeDecomposition& decomp, IVec v, IVec lo,
                            IVec hi) {
    std::set<IVec> dlink;
    for (const auto& f1 : tile) {
        for (const auto& f2 : tile) {
            dlink.insert(f1 - f2 + v);
            dlink.insert(f1 - f2 - v);
        }
    }
    const auto window_plates = plates_on_window(decomp, tiling, lo, hi);
    for (const auto& plate : window_plates) {
        if (plate.size() > 12 || plate.size() < 2) continue;
        const size_t n = plate.size();
        for (size_t mask = 1; mask + 1 < (size_t{1} << n); ++mask) {
            bool leaks = false;
            for (size_t i = 0; i < n && !leaks; ++i) {
                if (!(mask & (size_t{1} << i))) continue;
                for (size_t j = 0; j < n && !leaks; ++j) {
                    if (mask & (size_t{1} << j)) continue;
                    if (dlink.count(plate[j] - plate[i])) leaks = true;
                }
            }
            CHECK(leaks);
        }
    }
}

} // namespace

TEST_CASE("grid of unit cells quakes into columns") {
    const std::vector<IVec> tile = {{0, 0}};
    const IntPeriodic grid{{{0, 0}}, Lattice{1, 0, 1}};
    const auto decomp = earthquake_decomposition(tile, grid, {0, 1});
    REQUIRE(decomp.families.size() == 1);
    CHECK(decomp.families[0].h.rank == 1);
    CHECK(decomp.families[0].h.gen1 == IVec{0, 1});
    CHECK(decomp.total_plates == -1); // one column per x

    const auto plates = plates_on_window(decomp, grid, {-2, -2}, {2, 2});
    CHECK(plates.size() == 5); // five columns in the window
    for (const auto& plate : plates) {
        const long long x0 = plate.front().x;
        for (const auto& t : plate) CHECK(t.x == x0);
    }

    check_plate_partition(grid, decomp, {-2, -2}, {2, 2});
    check_plate_invariance(tile, grid, decomp, {0, 1}, {-2, -2}, {2, 2});
    check_plate_minimality(tile, grid, decomp, {0, 1}, {-1, -2}, {1, 2});
}

TEST_CASE("checkerboarded dominoes quake into single columns with period 2") {
    const std::vector<IVec> tile = {{0, 0}, {0, 1}};
    const IntPeriodic tiling{{{0, 0}, {1, 1}}, Lattice{2, 0, 2}};
    REQUIRE(verify_tiling(tile, TilingDesc::periodic(
                                    {RatPoint(0, 0), RatPoint(1, 1)},
                                    rat_lattice_from_generators(
                                        {RatPoint(2, 0), RatPoint(0, 2)}))));

    const auto decomp = earthquake_decomposition(tile, tiling, {0, 1});
    REQUIRE(decomp.families.size() == 2);
    for (const auto& fam : decomp.families) {
        CHECK(fam.h.rank == 1);
        CHECK(fam.h.gen1 == IVec{0, 2});
    }

    const auto plates = plates_on_window(decomp, tiling, {-3, -3}, {3, 3});
    for (const auto& plate : plates) {
        const long long x0 = plate.front().x;
        for (const auto& t : plate) CHECK(t.x == x0);
    }
    check_plate_partition(tiling, decomp, {-3, -3}, {3, 3});
    check_plate_invariance(tile, tiling, decomp, {0, 1}, {-3, -3}, {3, 3});
    check_plate_minimality(tile, tiling, decomp, {0, 1}, {-2, -3}, {2, 3});
}

TEST_CASE("the tromino staircase is a single plate with H the full lattice") {
    const std::vector<IVec> tile = {{0, 0}, {1, 0}, {0, 1}};
    const Lattice staircase = lattice_from_generators({{1, 1}, {3, 0}});
    const IntPeriodic tiling{{staircase.reduce({0, 0})}, staircase};

    const auto decomp = earthquake_decomposition(tile, tiling, {0, 1});
    REQUIRE(decomp.families.size() == 1);
    REQUIRE(decomp.families[0].h.rank == 2);
    CHECK(decomp.families[0].h.contains({1, 1}));
    CHECK(decomp.families[0].h.contains({-1, 2}));
    CHECK(decomp.families[0].h.full->index() == 3); // equals the tiling lattice
    CHECK(decomp.total_plates == 1);

    check_plate_partition(tiling, decomp, {-4, -4}, {4, 4});
    check_plate_invariance(tile, tiling, decomp, {0, 1}, {-3, -3}, {3, 3});
}
