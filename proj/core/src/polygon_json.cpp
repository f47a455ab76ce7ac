#include "polytile/polygon_json.hpp"

#include "polytile/errors.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>

namespace polytile {

namespace {

using nlohmann::json;

Rational coord_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw SyntaxError("coordinate must be a decimal-integer or \"p/q\" string");
}

Loop loop_from_json(const json& j) {
    if (!j.is_array()) throw SyntaxError("loop must be an array of [x,y] pairs");
    Loop loop;
    for (const auto& pt : j) {
        if (!pt.is_array() || pt.size() != 2) {
            throw SyntaxError("vertex must be a [x,y] pair");
        }
        loop.push_back({coord_from_json(pt[0]), coord_from_json(pt[1])});
    }
    return loop;
}

json loop_to_json(const Loop& loop) {
    json out = json::array();
    for (const auto& p : loop) {
        out.push_back({rational_to_string(p.x), rational_to_string(p.y)});
    }
    return out;
}

} // namespace

PolygonalSet parse_polygonal_set(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("polygons") || !root["polygons"].is_array()) {
        throw SyntaxError("top level must be {\"polygons\": [...]}");
    }
    std::vector<PolygonWithHoles> polys;
    for (const auto& jp : root["polygons"]) {
        if (!jp.is_object() || !jp.contains("outer")) {
            throw SyntaxError("polygon must be {\"outer\": [...], \"holes\": [...]}");
        }
        PolygonWithHoles poly;
        poly.outer = loop_from_json(jp["outer"]);
        if (jp.contains("holes")) {
            if (!jp["holes"].is_array()) throw SyntaxError("holes must be an array of loops");
            for (const auto& jh : jp["holes"]) {
                poly.holes.push_back(loop_from_json(jh));
            }
        }
        polys.push_back(std::move(poly));
    }
    return make_polygonal_set(std::move(polys));
}

PolygonalSet read_polygonal_set(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polygonal_set(buf.str());
}

std::string serialize_polygonal_set(const PolygonalSet& s) {
    json root;
    root["polygons"] = json::array();
    for (const auto& poly : s.polygons) {
        json jp;
        jp["outer"] = loop_to_json(poly.outer);
        jp["holes"] = json::array();
        for (const auto& hole : poly.holes) {
            jp["holes"].push_back(loop_to_json(hole));
        }
        root["polygons"].push_back(std::move(jp));
    }
    return root.dump(2) + "\n";
}

} // namespace polytile
