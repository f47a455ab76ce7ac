#include "polytile/discrete_tile.hpp"

#include "polytile/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace polytile {

std::pair<IVec, IVec> DiscreteTile::bounding_box() const {
    IVec lo = points.front(), hi = points.front();
    for (const auto& p : points) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    return {lo, hi};
}

bool cell_occupancy(const IntegerPolygonalSet& omega, const UnitCellPartition& part,
                    IVec cell, int face_index) {
    const Face& f = part.face(face_index);
    const RatPoint probe = f.representative + to_rat(cell);
    return locate_point(omega.base, probe) == PointLocation::Inside;
}

Discretization discretize(const IntegerPolygonalSet& omega) {
    Discretization out;
    out.partition = unit_cell_partition(omega);
    const int m = out.partition.face_count;
    const long long n = out.partition.n;
    out.markers = build_marker_sets(m, out.partition.k, out.partition.n);

    out.tile.scale = n;
    const auto [lo, hi] = omega.bounding_box();
    for (long long cy = lo.y - 1; cy <= hi.y; ++cy) {
        for (long long cx = lo.x - 1; cx <= hi.x; ++cx) {
            const IVec cell{cx, cy};
            for (int i = 0; i < m; ++i) {
                if (!cell_occupancy(omega, out.partition, cell, i)) continue;
                for (const auto& s : out.markers[static_cast<size_t>(i)].points) {
                    out.tile.points.push_back({n * cx + s.x, n * cy + s.y});
                }
            }
        }
    }
    std::sort(out.tile.points.begin(), out.tile.points.end());
    const auto dup = std::adjacent_find(out.tile.points.begin(), out.tile.points.end());
    if (dup != out.tile.points.end()) {
        throw InvariantViolationError("marker sets collided across cells");
    }
    return out;
}

std::string tile_to_text(const DiscreteTile& tile) {
    std::ostringstream out;
    out << "scale " << tile.scale << "\n";
    for (const auto& p : tile.points) {
        out << p.x << " " << p.y << "\n";
    }
    return out.str();
}

DiscreteTile tile_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string word;
    DiscreteTile tile;
    if (!(in >> word) || word != "scale" || !(in >> tile.scale) || tile.scale < 1) {
        throw SyntaxError("tile file must start with 'scale N'");
    }
    long long x, y;
    while (in >> x >> y) {
        tile.points.push_back({x, y});
    }
    if (!in.eof()) {
        std::string rest;
        in.clear();
        in >> rest;
        throw SyntaxError("bad token in tile file: '" + rest + "'");
    }
    if (tile.points.empty()) throw SyntaxError("tile file has no points");
    std::sort(tile.points.begin(), tile.points.end());
    tile.points.erase(std::unique(tile.points.begin(), tile.points.end()),
                      tile.points.end());
    return tile;
}

} // namespace polytile
