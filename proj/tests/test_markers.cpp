#include "polytile/markers.hpp"

#include <doctest.h>

#include <set>

using namespace polytile;

TEST_CASE("parameter table") {
    CHECK(compute_parameters(1).k == 1);
    CHECK(compute_parameters(1).n == 7);
    CHECK(compute_parameters(4).k == 2);
    CHECK(compute_parameters(4).n == 10);
    CHECK(compute_parameters(7).k == 3);
    CHECK(compute_parameters(7).n == 13);
    CHECK(compute_parameters(9).k == 3);
    CHECK(compute_parameters(10).k == 4);
    CHECK(compute_parameters(10).n == 16);
}

TEST_CASE("ring marker for M=4, i=1") {
    const auto sets = build_marker_sets(4, 2, 10);
    REQUIRE(sets.size() == 4);
    // (a_1, b_1) = (2, 1), ring around (6, 3)
    const std::set<IVec> expected = {{5, 2}, {6, 2}, {7, 2}, {5, 3},
                                     {7, 3}, {5, 4}, {6, 4}, {7, 4}};
    const std::set<IVec> got(sets[1].points.begin(), sets[1].points.end());
    CHECK(got == expected);
}

TEST_CASE("base marker set for M=1") {
    const auto sets = build_marker_sets(1, 1, 7);
    REQUIRE(sets.size() == 1);
    const auto& s0 = sets[0].points;
    CHECK(s0.size() == 49);
    const std::set<IVec> got(s0.begin(), s0.end());
    CHECK(got.count({7, 1}) == 1);
    CHECK(got.count({1, 7}) == 1);
    CHECK(got.count({0, 1}) == 0);
    CHECK(got.count({1, 0}) == 0);
    CHECK(got.count({0, 0}) == 1);
    CHECK(got.count({6, 6}) == 1);
}

TEST_CASE("marker sets partition N^2 points and stay disjoint") {
    for (int m = 1; m <= 20; ++m) {
        const auto [k, n] = compute_parameters(m);
        const auto sets = build_marker_sets(m, k, n);
        std::set<IVec> all;
        size_t total = 0;
        for (const auto& s : sets) {
            total += s.points.size();
            for (const auto& p : s.points) {
                CHECK(all.insert(p).second); // pairwise disjoint
            }
        }
        CHECK(total == static_cast<size_t>(n) * static_cast<size_t>(n));
        // rings never touch the outer rows/columns of the grid
        for (size_t i = 1; i < sets.size(); ++i) {
            for (const auto& p : sets[i].points) {
                CHECK(p.x >= 2);
                CHECK(p.y >= 2);
                CHECK(p.x <= n - 3);
                CHECK(p.y <= n - 3);
            }
        }
    }
}
