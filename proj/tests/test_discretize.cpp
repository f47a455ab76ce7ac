#include "polytile/discrete_tile.hpp"
#include "polytile/errors.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace polytile;

namespace {

Rational tile_cardinality_bound(const IntegerPolygonalSet& omega, const DiscreteTile& t) {
    return rat_of(t.scale) * rat_of(t.scale) * area(omega.base);
}

} // namespace

TEST_CASE("unit square encodes to the 49-point base pattern") {
    const auto d = discretize(corpus::unit_square());
    CHECK(d.tile.scale == 7);
    CHECK(d.tile.points.size() == 49);
    const std::set<IVec> pts(d.tile.points.begin(), d.tile.points.end());
    CHECK(pts.count({7, 1}) == 1); // anchors survive the single occupied cell
    CHECK(pts.count({1, 7}) == 1);
    CHECK(pts.count({0, 1}) == 0);
    CHECK(pts.count({1, 0}) == 0);
}

TEST_CASE("cardinality law |NF| = N^2 area") {
    for (const auto& omega : {corpus::unit_square(), corpus::rectangle_2x1(),
                              corpus::l_tromino(), corpus::right_triangle(),
                              corpus::chevron()}) {
        const auto d = discretize(omega);
        CHECK(rat_of(static_cast<long long>(d.tile.points.size())) ==
              tile_cardinality_bound(omega, d.tile));
    }
}

TEST_CASE("tromino gets three full cells") {
    const auto d = discretize(corpus::l_tromino());
    CHECK(d.tile.scale == 7);
    CHECK(d.tile.points.size() == 147);
}

TEST_CASE("occupancy basics") {
    const auto omega = corpus::unit_square();
    const auto part = unit_cell_partition(omega);
    CHECK(cell_occupancy(omega, part, {0, 0}, 0));
    CHECK(!cell_occupancy(omega, part, {1, 0}, 0));

    const auto tri = corpus::right_triangle();
    const auto tpart = unit_cell_partition(tri);
    int occupied = 0;
    for (int i = 0; i < tpart.face_count; ++i) {
        if (cell_occupancy(tri, tpart, {0, 0}, i)) ++occupied;
    }
    CHECK(occupied == 1); // exactly one of the two faces lies inside
}

TEST_CASE("points decompose into whole marker sets per cell") {
    for (const auto& omega : {corpus::right_triangle(), corpus::chevron()}) {
        const auto d = discretize(omega);
        const long long n = d.tile.scale;

        // group points by source cell, including anchor spill-over
        std::map<IVec, std::set<IVec>> per_cell;
        for (const auto& p : d.tile.points) {
            IVec local{((p.x % n) + n) % n, ((p.y % n) + n) % n};
            IVec cell{(p.x - local.x) / n, (p.y - local.y) / n};
            // anchor points (N,1),(1,N) belong to the previous cell
            if (local == IVec{0, 1} || local == IVec{1, 0}) {
                // (0,1)/(1,0) are never markers; this must be an anchor
                if (local == IVec{0, 1}) {
                    cell.x -= 1;
                    local.x += n;
                } else {
                    cell.y -= 1;
                    local.y += n;
                }
            }
            per_cell[cell].insert(local);
        }

        for (const auto& [cell, pts] : per_cell) {
            // the cell's point set must be a disjoint union of whole markers
            std::set<IVec> rest = pts;
            for (const auto& m : d.markers) {
                const bool uses =
                    rest.count(m.points.front()) > 0 || rest.count(m.points.back()) > 0;
                if (!uses) continue;
                for (const auto& q : m.points) {
                    REQUIRE(rest.erase(q) == 1);
                }
            }
            CHECK(rest.empty());
        }
    }
}

TEST_CASE("text format round trip") {
    const auto d = discretize(corpus::right_triangle());
    const std::string text = tile_to_text(d.tile);
    CHECK(text.rfind("scale 10", 0) == 0);
    const DiscreteTile back = tile_from_text(text);
    CHECK(back.scale == d.tile.scale);
    CHECK(back.points == d.tile.points);
    CHECK(tile_to_text(back) == text);
}

TEST_CASE("text format rejects garbage") {
    CHECK_THROWS_AS(tile_from_text("0 0\n1 1\n"), SyntaxError);
    CHECK_THROWS_AS(tile_from_text("scale 0\n0 0\n"), SyntaxError);
    CHECK_THROWS_AS(tile_from_text("scale 7\n0 zero\n"), SyntaxError);
    CHECK_THROWS_AS(tile_from_text("scale 7\n"), SyntaxError);
}
