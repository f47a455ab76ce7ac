#include "polytile/svg.hpp"

#include "polytile/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polytile {

namespace {

const char* kPalette[] = {
    "#bdbdbd", "#66bb6a", "#ffa726", "#42a5f5", "#ab47bc", "#ef5350",
    "#26a69a", "#d4e157", "#8d6e63", "#78909c", "#ffca28", "#5c6bc0",
};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

const char* color(size_t i) { return kPalette[i % kPaletteSize]; }

// exact rational -> fixed 3-decimal string, round half up
std::string px(const Rational& value) {
    const Rational scaled = value * 1000;
    Integer n = scaled.get_num();
    Integer d = scaled.get_den();
    const bool neg = sgn(scaled) < 0;
    if (neg) n = -n;
    Integer q = (2 * n + d) / (2 * d); // round(n/d)
    std::string digits = q.get_str();
    while (digits.size() < 4) digits.insert(digits.begin(), '0');
    std::string whole = digits.substr(0, digits.size() - 3);
    std::string frac = digits.substr(digits.size() - 3);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (neg && q != 0) ? "-" : "";
    out += whole;
    if (!frac.empty()) out += "." + frac;
    return out;
}

class Canvas {
public:
    Canvas(const RatPoint& lo, const RatPoint& hi, long long cell_pixels)
        : lo_(lo), hi_(hi), scale_(cell_pixels) {}

    std::string x(const Rational& v) const { return px(rat_of(scale_) * (v - lo_.x)); }
    std::string y(const Rational& v) const { return px(rat_of(scale_) * (hi_.y - v)); }

    void polygon(const Loop& loop, const std::string& fill, const std::string& stroke,
                 const std::string& stroke_width) {
        body_ << "<path d=\"";
        for (size_t i = 0; i < loop.size(); ++i) {
            body_ << (i == 0 ? "M" : "L") << x(loop[i].x) << " " << y(loop[i].y);
        }
        body_ << "Z\" fill=\"" << fill << "\" stroke=\"" << stroke
              << "\" stroke-width=\"" << stroke_width << "\"/>\n";
    }

    void rect(const Rational& rx, const Rational& ry, const Rational& w,
              const Rational& h, const std::string& fill) {
        body_ << "<rect x=\"" << x(rx) << "\" y=\"" << y(ry + h) << "\" width=\""
              << px(rat_of(scale_) * w) << "\" height=\"" << px(rat_of(scale_) * h)
              << "\" fill=\"" << fill << "\"/>\n";
    }

    void line(const RatPoint& a, const RatPoint& b, const std::string& stroke,
              const std::string& width) {
        body_ << "<line x1=\"" << x(a.x) << "\" y1=\"" << y(a.y) << "\" x2=\"" << x(b.x)
              << "\" y2=\"" << y(b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\""
              << width << "\"/>\n";
    }

    std::string finish() const {
        const std::string w = px(rat_of(scale_) * (hi_.x - lo_.x));
        const std::string h = px(rat_of(scale_) * (hi_.y - lo_.y));
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
            << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    RatPoint lo_, hi_;
    long long scale_;
    std::ostringstream body_;
};

std::pair<RatPoint, RatPoint> bounds_of(const std::vector<RatPoint>& pts,
                                        const Rational& margin) {
    RatPoint lo = pts.front(), hi = pts.front();
    for (const auto& p : pts) {
        if (cmp(p.x, lo.x) < 0) lo.x = p.x;
        if (cmp(p.y, lo.y) < 0) lo.y = p.y;
        if (cmp(p.x, hi.x) > 0) hi.x = p.x;
        if (cmp(p.y, hi.y) > 0) hi.y = p.y;
    }
    lo.x -= margin;
    lo.y -= margin;
    hi.x += margin;
    hi.y += margin;
    return {lo, hi};
}

} // namespace

std::string render_polygon_svg(const PolygonalSet& s, const RenderOptions& opt) {
    const auto [lo, hi] = bounds_of(s.vertices(), Rational(1, 2));
    Canvas canvas(lo, hi, opt.cell_pixels);
    for (const auto& poly : s.polygons) {
        canvas.polygon(poly.outer, color(0), "black", "2");
        for (const auto& hole : poly.holes) {
            canvas.polygon(hole, "white", "black", "2");
        }
    }
    return canvas.finish();
}

std::string render_partition_svg(const UnitCellPartition& part, const RenderOptions& opt) {
    Canvas canvas(RatPoint(Rational(-1, 4), Rational(-1, 4)),
                  RatPoint(Rational(5, 4), Rational(5, 4)), opt.cell_pixels);
    for (int i = 0; i < part.face_count; ++i) {
        canvas.polygon(part.face(i).boundary, color(static_cast<size_t>(i)), "black", "1");
    }
    return canvas.finish();
}

std::string render_discrete_tile_svg(const Discretization& d, const RenderOptions& opt) {
    const long long n = d.tile.scale;
    std::map<IVec, size_t> marker_of;
    for (const auto& p : d.tile.points) {
        // recover which marker the point came from via its residue
        const IVec local{((p.x % n) + n) % n, ((p.y % n) + n) % n};
        for (size_t i = 0; i < d.markers.size(); ++i) {
            const auto& pts = d.markers[i].points;
            bool found = std::binary_search(pts.begin(), pts.end(), local);
            if (!found && i == 0) {
                // anchors live outside the square
                found = std::binary_search(pts.begin(), pts.end(), IVec{local.x + n, local.y}) ||
                        std::binary_search(pts.begin(), pts.end(), IVec{local.x, local.y + n});
            }
            if (found) {
                marker_of[p] = i;
                break;
            }
        }
    }
    const auto [blo, bhi] = d.tile.bounding_box();
    const Rational inv = Rational(1) / rat_of(n);
    Canvas canvas(RatPoint(rat_of(blo.x - 1) * inv, rat_of(blo.y - 1) * inv),
                  RatPoint(rat_of(bhi.x + 2) * inv, rat_of(bhi.y + 2) * inv),
                  opt.cell_pixels);
    for (const auto& p : d.tile.points) {
        const auto it = marker_of.find(p);
        const size_t idx = (it == marker_of.end()) ? 0 : it->second;
        canvas.rect(rat_of(p.x) * inv, rat_of(p.y) * inv, inv, inv, color(idx));
    }
    return canvas.finish();
}

std::string render_discrete_tile_svg(const DiscreteTile& tile, const RenderOptions& opt) {
    const auto [blo, bhi] = tile.bounding_box();
    const Rational inv = Rational(1) / rat_of(tile.scale);
    Canvas canvas(RatPoint(rat_of(blo.x - 1) * inv, rat_of(blo.y - 1) * inv),
                  RatPoint(rat_of(bhi.x + 2) * inv, rat_of(bhi.y + 2) * inv),
                  opt.cell_pixels);
    for (const auto& p : tile.points) {
        canvas.rect(rat_of(p.x) * inv, rat_of(p.y) * inv, inv, inv, color(3));
    }
    return canvas.finish();
}

std::string render_tiling_svg(const PolygonalSet& s, const TilingDesc& desc,
                              IVec window_lo, IVec window_hi, const RenderOptions& opt) {
    const RatPoint lo = to_rat(window_lo);
    const RatPoint hi = to_rat(window_hi);
    Canvas canvas(lo, hi, opt.cell_pixels);

    // enumerate description points near the window by brute scan over the
    // denominator grid
    const long long q = desc.denominator();
    size_t idx = 0;
    for (long long sy = q * window_lo.y; sy <= q * window_hi.y; ++sy) {
        for (long long sx = q * window_lo.x; sx <= q * window_hi.x; ++sx) {
            const RatPoint t{rat_of(sx) / rat_of(q), rat_of(sy) / rat_of(q)};
            if (!desc.contains(t)) continue;
            for (const auto& poly : s.polygons) {
                Loop shifted;
                for (const auto& p : poly.outer) shifted.push_back(p + t);
                canvas.polygon(shifted, color(idx % 6 + 1), "black", "1");
            }
            ++idx;
        }
    }
    return canvas.finish();
}

std::string render_plates_svg(const std::vector<IVec>& tile_points,
                              const IntPeriodic& tiling,
                              const EarthquakeDecomposition& decomp,
                              IVec window_lo, IVec window_hi,
                              const RenderOptions& opt) {
    Canvas canvas(to_rat(window_lo), to_rat(window_hi), opt.cell_pixels);
    const auto plates = plates_on_window(decomp, tiling, window_lo, window_hi);
    for (size_t pi = 0; pi < plates.size(); ++pi) {
        for (const auto& t : plates[pi]) {
            for (const auto& f : tile_points) {
                const IVec p = f + t;
                canvas.rect(rat_of(p.x), rat_of(p.y), Rational(1), Rational(1),
                            color(pi));
            }
        }
    }
    return canvas.finish();
}

} // namespace polytile
