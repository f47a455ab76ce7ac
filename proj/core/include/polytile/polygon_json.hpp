#pragma once

#include "polytile/polygon.hpp"

#include <iosfwd>
#include <string>

namespace polytile {

// Schema: {"polygons":[{"outer":[[x,y],...],"holes":[[[x,y],...],...]}]}
// where x and y are decimal-integer or "p/q" strings. Parsing is exact;
// floating point never touches a coordinate.
PolygonalSet parse_polygonal_set(const std::string& text);
PolygonalSet read_polygonal_set(std::istream& in);

// Lowest-terms rationals, canonical orientation and vertex order; parsing the
// output reproduces the set exactly.
std::string serialize_polygonal_set(const PolygonalSet& s);

} // namespace polytile
