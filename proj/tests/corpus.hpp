#pragma once

// Shared test corpus: small integer polygonal sets with known behaviour.

#include "polytile/polygon.hpp"
#include "polytile/polygon_json.hpp"

#include <string>

namespace corpus {

inline polytile::PolygonalSet from_json(const std::string& text) {
    return polytile::parse_polygonal_set(text);
}

inline polytile::IntegerPolygonalSet unit_square() {
    return polytile::as_integer_set(from_json(
        R"({"polygons":[{"outer":[["0","0"],["1","0"],["1","1"],["0","1"]],"holes":[]}]})"));
}

inline polytile::IntegerPolygonalSet rectangle_2x1() {
    return polytile::as_integer_set(from_json(
        R"({"polygons":[{"outer":[["0","0"],["2","0"],["2","1"],["0","1"]],"holes":[]}]})"));
}

// cells (0,0), (1,0), (0,1)
inline polytile::IntegerPolygonalSet l_tromino() {
    return polytile::as_integer_set(from_json(
        R"({"polygons":[{"outer":[["0","0"],["2","0"],["2","1"],["1","1"],["1","2"],["0","2"]],"holes":[]}]})"));
}

inline polytile::IntegerPolygonalSet right_triangle() {
    return polytile::as_integer_set(from_json(
        R"({"polygons":[{"outer":[["0","0"],["1","0"],["0","1"]],"holes":[]}]})"));
}

// nonconvex chevron with slope +-1 edges; cuts the unit cell into 4 faces
inline polytile::IntegerPolygonalSet chevron() {
    return polytile::as_integer_set(from_json(
        R"({"polygons":[{"outer":[["0","0"],["2","2"],["4","0"],["4","1"],["2","3"],["0","1"]],"holes":[]}]})"));
}

} // namespace corpus
