#include "polytile/tiling_desc.hpp"

#include "polytile/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace polytile {

namespace {

// p = t * g for an integer t?
bool integer_multiple(const RatPoint& p, const RatPoint& g) {
    const int gx = sgn(g.x), gy = sgn(g.y);
    if (gx == 0 && gy == 0) return p.x == 0 && p.y == 0;
    Rational t;
    if (gx != 0) {
        t = p.x / g.x;
        if (p.y != t * g.y) return false;
    } else {
        if (sgn(p.x) != 0) return false;
        t = p.y / g.y;
    }
    return is_integer(t);
}

} // namespace

bool Component::contains(const RatPoint& p) const {
    if (periods.size() == 2) {
        // membership in the rational lattice spanned by the two periods
        const RatLattice lat = rat_lattice_from_generators(periods);
        for (const auto& b : base) {
            if (lat.contains(p - b)) return true;
        }
        return false;
    }
    for (const auto& b : base) {
        if (integer_multiple(p - b, periods.front())) return true;
    }
    return false;
}

bool TilingDesc::contains(const RatPoint& p) const {
    if (kind == Kind::Periodic) {
        for (const auto& b : base) {
            if (lattice.contains(p - b)) return true;
        }
        return false;
    }
    for (const auto& c : components) {
        if (c.contains(p)) return true;
    }
    return false;
}

namespace {

void fold_point_denoms(const RatPoint& p, Integer& q) {
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), p.x.get_den().get_mpz_t());
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), p.y.get_den().get_mpz_t());
}

} // namespace

long long TilingDesc::denominator() const {
    Integer q(1);
    if (kind == Kind::Periodic) {
        for (const auto& b : base) fold_point_denoms(b, q);
        mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), Integer(static_cast<long>(lattice.den)).get_mpz_t());
    } else {
        for (const auto& c : components) {
            for (const auto& b : c.base) fold_point_denoms(b, q);
            for (const auto& p : c.periods) fold_point_denoms(p, q);
        }
    }
    return to_int64(q);
}

bool TilingDesc::is_integral() const { return denominator() == 1; }

TilingDesc TilingDesc::scaled(long long q) const {
    const Rational s = rat_of(q);
    TilingDesc out = *this;
    auto scale_points = [&s](std::vector<RatPoint>& pts) {
        for (auto& p : pts) p = s * p;
    };
    if (kind == Kind::Periodic) {
        scale_points(out.base);
        // (1/den) L scaled by q: gcd-reduce q/den into the lattice
        std::vector<RatPoint> gens = {s * RatPoint(lattice.num.a, 0),
                                      s * RatPoint(lattice.num.b, lattice.num.d)};
        for (auto& g : gens) g = RatPoint(g.x / rat_of(lattice.den), g.y / rat_of(lattice.den));
        out.lattice = rat_lattice_from_generators(gens);
    } else {
        for (auto& c : out.components) {
            scale_points(c.base);
            scale_points(c.periods);
            c.slide_offset = s * c.slide_offset;
        }
    }
    return out;
}

TilingDesc TilingDesc::periodic(std::vector<RatPoint> base, RatLattice lattice) {
    TilingDesc d;
    d.kind = Kind::Periodic;
    d.base = std::move(base);
    d.lattice = lattice;
    return d;
}

TilingDesc TilingDesc::sheared(std::vector<Component> comps, IVec direction) {
    TilingDesc d;
    d.kind = Kind::Sheared;
    d.components = std::move(comps);
    d.direction = direction;
    return d;
}

TilingDesc TilingDesc::integer_grid() {
    return periodic({RatPoint(0, 0)}, RatLattice{Lattice{1, 0, 1}, 1});
}

IntPeriodic int_periodic_view(const TilingDesc& desc) {
    if (desc.kind != TilingDesc::Kind::Periodic) {
        throw UnsupportedDescriptionError("expected a periodic description");
    }
    if (desc.lattice.den != 1) {
        throw UnsupportedDescriptionError("lattice is not integral");
    }
    IntPeriodic out;
    out.lattice = desc.lattice.num;
    for (const auto& b : desc.base) {
        if (!is_integer(b.x) || !is_integer(b.y)) {
            throw UnsupportedDescriptionError("base point is not integral");
        }
        out.base.push_back(out.lattice.reduce({rational_to_int64(b.x), rational_to_int64(b.y)}));
    }
    std::sort(out.base.begin(), out.base.end());
    out.base.erase(std::unique(out.base.begin(), out.base.end()), out.base.end());
    return out;
}

// ---- JSON ---------------------------------------------------------------

namespace {

using nlohmann::json;

RatPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw SyntaxError("point must be [x, y]");
    auto coord = [](const json& c) -> Rational {
        if (c.is_string()) return parse_rational(c.get<std::string>());
        if (c.is_number_integer()) return Rational(static_cast<long>(c.get<long long>()));
        throw SyntaxError("coordinate must be an integer or \"p/q\" string");
    };
    return {coord(j[0]), coord(j[1])};
}

json point_to_json(const RatPoint& p) {
    return json::array({rational_to_string(p.x), rational_to_string(p.y)});
}

std::vector<RatPoint> points_from_json(const json& j) {
    if (!j.is_array()) throw SyntaxError("expected an array of points");
    std::vector<RatPoint> out;
    for (const auto& e : j) out.push_back(point_from_json(e));
    return out;
}

json points_to_json(const std::vector<RatPoint>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(point_to_json(p));
    return out;
}

} // namespace

TilingDesc parse_tiling_desc(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("type")) {
        throw SyntaxError("tiling description needs a \"type\"");
    }
    const std::string type = root["type"].get<std::string>();
    if (type == "periodic") {
        if (!root.contains("base") || !root.contains("lattice")) {
            throw SyntaxError("periodic description needs \"base\" and \"lattice\"");
        }
        const auto& jl = root["lattice"];
        if (!jl.is_object() || !jl.contains("generators")) {
            throw SyntaxError("lattice needs \"generators\": [[x,y],[x,y]]");
        }
        const auto gens = points_from_json(jl["generators"]);
        if (gens.size() != 2) throw SyntaxError("lattice needs exactly two generators");
        return TilingDesc::periodic(points_from_json(root["base"]),
                                    rat_lattice_from_generators(gens));
    }
    if (type == "sheared") {
        if (!root.contains("components")) {
            throw SyntaxError("sheared description needs \"components\"");
        }
        IVec dir{0, 1};
        if (root.contains("direction")) {
            const auto d = point_from_json(root["direction"]);
            dir = {rational_to_int64(d.x), rational_to_int64(d.y)};
        }
        std::vector<Component> comps;
        for (const auto& jc : root["components"]) {
            Component c;
            c.base = points_from_json(jc.at("base"));
            c.periods = points_from_json(jc.at("periods"));
            if (c.periods.empty() || c.periods.size() > 2) {
                throw SyntaxError("component needs one or two periods");
            }
            if (jc.contains("offset")) {
                c.slide_offset = parse_rational(jc["offset"].get<std::string>());
            }
            comps.push_back(std::move(c));
        }
        if (comps.empty()) throw SyntaxError("sheared description has no components");
        return TilingDesc::sheared(std::move(comps), dir);
    }
    throw SyntaxError("unknown tiling type: " + type);
}

std::string serialize_tiling_desc(const TilingDesc& desc) {
    json root;
    if (desc.kind == TilingDesc::Kind::Periodic) {
        root["type"] = "periodic";
        root["base"] = points_to_json(desc.base);
        const Rational q = rat_of(desc.lattice.den);
        root["lattice"]["generators"] = json::array(
            {point_to_json({rat_of(desc.lattice.num.a) / q, Rational(0)}),
             point_to_json({rat_of(desc.lattice.num.b) / q, rat_of(desc.lattice.num.d) / q})});
    } else {
        root["type"] = "sheared";
        root["direction"] = json::array({desc.direction.x, desc.direction.y});
        root["components"] = json::array();
        for (const auto& c : desc.components) {
            json jc;
            jc["base"] = points_to_json(c.base);
            jc["periods"] = points_to_json(c.periods);
            jc["offset"] = rational_to_string(c.slide_offset);
            root["components"].push_back(std::move(jc));
        }
    }
    return root.dump(2) + "\n";
}

} // namespace polytile
