#include "polytile/decide.hpp"

#include "polytile/errors.hpp"

#include "corpus.hpp"

#include <doctest.h>

using namespace polytile;

namespace {

DiscreteTile singleton() {
    DiscreteTile t;
    t.scale = 1;
    t.points = {{0, 0}};
    return t;
}

DiscreteTile row_tile() {
    DiscreteTile t;
    t.scale = 1;
    t.points = {{0, 0}, {1, 0}, {3, 0}};
    return t;
}

} // namespace

TEST_CASE("a singleton is tileable by the full grid") {
    const Decision d = decide(singleton());
    REQUIRE(d.kind == Decision::Kind::Tileable);
    CHECK(d.certificate->lattice == Lattice{1, 0, 1});
    CHECK(d.certificate->translates == std::vector<IVec>{{0, 0}});
}

TEST_CASE("the unit square decides with the expected certificate") {
    const auto tile = discretize(corpus::unit_square()).tile;
    const Decision d = decide(tile);
    REQUIRE(d.kind == Decision::Kind::Tileable);
    CHECK(d.certificate->lattice == Lattice{7, 0, 7});
    CHECK(d.certificate->lattice.index() == 49);
    CHECK(d.certificate->translates.size() == 1);
    CHECK(verify_tiling(tile.points, *d.certificate));
}

TEST_CASE("the tromino decides at index 147") {
    const auto tile = discretize(corpus::l_tromino()).tile;
    const Decision d = decide(tile);
    REQUIRE(d.kind == Decision::Kind::Tileable);
    CHECK(d.certificate->lattice.index() == 147);
    CHECK(verify_tiling(tile.points, *d.certificate));
}

TEST_CASE("the gapped row tile is refuted at radius 2") {
    const Decision d = decide(row_tile());
    REQUIRE(d.kind == Decision::Kind::NotTileable);
    CHECK(d.refutation_radius == 2);
}

TEST_CASE("budget suspends and resume completes identically") {
    const auto tile = discretize(corpus::l_tromino()).tile;
    const Decision full = decide(tile);
    REQUIRE(full.kind == Decision::Kind::Tileable);

    // one unit at a time until done
    std::optional<SessionState> state;
    Decision step;
    int iterations = 0;
    for (;;) {
        const long long budget = state ? state->stats.work_units + 1 : 1;
        step = decide(tile, budget, state);
        if (step.kind != Decision::Kind::Undecided) break;
        state = step.state;
        REQUIRE(++iterations < 10000);
    }
    REQUIRE(step.kind == Decision::Kind::Tileable);
    CHECK(step.certificate->lattice == full.certificate->lattice);
    CHECK(step.certificate->translates == full.certificate->translates);
    CHECK(step.stats.work_units == full.stats.work_units);

    // a coarser split must agree too
    const Decision half = decide(tile, full.stats.work_units / 2 + 1);
    if (half.kind == Decision::Kind::Undecided) {
        const Decision rest = decide(tile, std::nullopt, half.state);
        REQUIRE(rest.kind == Decision::Kind::Tileable);
        CHECK(rest.certificate->lattice == full.certificate->lattice);
        CHECK(rest.certificate->translates == full.certificate->translates);
    }
}

TEST_CASE("session state survives serialization") {
    const auto tile = discretize(corpus::l_tromino()).tile;
    const Decision d = decide(tile, 1);
    REQUIRE(d.kind == Decision::Kind::Undecided);
    const std::string text = serialize_session(*d.state);
    const SessionState back = parse_session(text);
    CHECK(back.tile_hash == d.state->tile_hash);
    CHECK(back.round == d.state->round);
    CHECK(back.lattice_cursor == d.state->lattice_cursor);
    CHECK(back.patch_pending == d.state->patch_pending);
    CHECK(back.stats.work_units == d.state->stats.work_units);

    const Decision resumed = decide(tile, std::nullopt, back);
    CHECK(resumed.kind == Decision::Kind::Tileable);
}

TEST_CASE("resume rejects a different tile") {
    const Decision d = decide(row_tile(), 1);
    REQUIRE(d.kind == Decision::Kind::Undecided);
    CHECK_THROWS_AS(decide(singleton(), std::nullopt, d.state), ValidationError);
}

TEST_CASE("multithreaded decide returns the same certificate") {
    const auto tile = discretize(corpus::l_tromino()).tile;
    const Decision one = decide(tile);
    const Decision four = decide(tile, std::nullopt, std::nullopt, 4);
    REQUIRE(four.kind == Decision::Kind::Tileable);
    CHECK(four.certificate->lattice == one.certificate->lattice);
    CHECK(four.certificate->translates == one.certificate->translates);
}
