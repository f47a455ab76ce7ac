#include "polytile/share_classes.hpp"

#include "polytile/errors.hpp"
#include "polytile/lift.hpp"

#include "corpus.hpp"

#include <doctest.h>

using namespace polytile;

namespace {

// columns of unit squares, odd columns lifted by 1/2
TilingDesc shifted_columns() {
    Component even, odd;
    even.base = {RatPoint(0, 0)};
    even.periods = {RatPoint(2, 0), RatPoint(0, 1)};
    odd.base = {RatPoint(Rational(1), make_rational(1, 2))};
    odd.periods = {RatPoint(2, 0), RatPoint(0, 1)};
    odd.slide_offset = make_rational(1, 2);
    return TilingDesc::sheared({even, odd}, {0, 1});
}

TilingDesc shifted_rows() {
    Component even, odd;
    even.base = {RatPoint(0, 0)};
    even.periods = {RatPoint(0, 2), RatPoint(1, 0)};
    odd.base = {RatPoint(make_rational(1, 2), Rational(1))};
    odd.periods = {RatPoint(0, 2), RatPoint(1, 0)};
    odd.slide_offset = make_rational(1, 2);
    return TilingDesc::sheared({even, odd}, {1, 0});
}

} // namespace

TEST_CASE("the grid tiling of the square is one class") {
    const auto classes =
        vertex_share_classes(corpus::unit_square(), TilingDesc::integer_grid());
    CHECK(classes.single_class());
    REQUIRE(classes.families.size() == 1);
    CHECK(classes.families[0].h_scaled.rank == 2);
    CHECK(classes.families[0].class_count == 1);
}

TEST_CASE("shifted columns split into one class per column") {
    const auto omega = corpus::unit_square();
    const auto desc = shifted_columns();
    REQUIRE(verify_continuous_tiling(omega, desc).ok);

    const auto classes = vertex_share_classes(omega, desc);
    CHECK(classes.total_classes == -1); // infinitely many columns
    REQUIRE(classes.families.size() == 2);
    for (const auto& fam : classes.families) {
        CHECK(fam.h_scaled.rank == 1);
        CHECK(fam.class_count == -1);
        REQUIRE(fam.representative.periods.size() == 1);
        CHECK(fam.representative.periods[0] == RatPoint(0, 1)); // vertical slide
    }

    // translate membership: neighbours in the same column share a class
    const ClassKey a = class_key_of(classes, RatPoint(0, 0));
    const ClassKey b = class_key_of(classes, RatPoint(0, 5));
    const ClassKey c = class_key_of(classes, RatPoint(2, 0));
    const ClassKey d = class_key_of(classes, RatPoint(Rational(1), make_rational(1, 2)));
    REQUIRE(a.family >= 0);
    CHECK(a == b);        // same column
    CHECK(a != c);        // different column, same family
    CHECK(a.family == c.family);
    CHECK(a.family != d.family);
    // points outside the tiling have no class
    CHECK(class_key_of(classes, RatPoint(Rational(1), Rational(0))).family == -1);
}

TEST_CASE("the tromino staircase is one class") {
    const TilingDesc staircase = TilingDesc::periodic(
        {RatPoint(0, 0)}, rat_lattice_from_generators({RatPoint(1, 1), RatPoint(3, 0)}));
    const auto classes = vertex_share_classes(corpus::l_tromino(), staircase);
    CHECK(classes.single_class());
}

TEST_CASE("sliding direction: none for a single class, axis for columns") {
    const auto omega = corpus::unit_square();
    const auto grid_classes = vertex_share_classes(omega, TilingDesc::integer_grid());
    CHECK(!sliding_direction(omega, TilingDesc::integer_grid(), grid_classes).has_value());

    const auto col_desc = shifted_columns();
    const auto col_classes = vertex_share_classes(omega, col_desc);
    const auto col_dir = sliding_direction(omega, col_desc, col_classes);
    REQUIRE(col_dir.has_value());
    CHECK(*col_dir == IVec{0, 1});

    const auto row_desc = shifted_rows();
    const auto row_classes = vertex_share_classes(omega, row_desc);
    const auto row_dir = sliding_direction(omega, row_desc, row_classes);
    REQUIRE(row_dir.has_value());
    CHECK(*row_dir == IVec{1, 0});
}

TEST_CASE("descriptions with no finite window are rejected") {
    Component lonely;
    lonely.base = {RatPoint(0, 0)};
    lonely.periods = {RatPoint(0, 1)};
    const TilingDesc d = TilingDesc::sheared({lonely}, {0, 1});
    CHECK_THROWS_AS(vertex_share_classes(corpus::unit_square(), d), WindowTooSmallError);
}
