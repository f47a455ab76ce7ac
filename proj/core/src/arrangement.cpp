#include "polytile/arrangement.hpp"

#include "polytile/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polytile {

namespace {

// Clips segment [a,b] to the closed unit square; empty optional when the
// intersection is empty or a single point.
std::optional<Segment> clip_to_unit_square(const RatPoint& a, const RatPoint& b) {
    Rational t0(0), t1(1);
    const RatPoint d = b - a;
    // halfplane p + t*dp >= 0
    auto cut = [&](const Rational& p, const Rational& dp) {
        const int sd = sgn(dp);
        if (sd == 0) return sgn(p) >= 0;
        const Rational t = -p / dp;
        if (sd > 0) {
            if (cmp(t, t0) > 0) t0 = t;
        } else {
            if (cmp(t, t1) < 0) t1 = t;
        }
        return true;
    };
    if (!cut(a.x, d.x)) return std::nullopt;           // x >= 0
    if (!cut(Rational(1) - a.x, -d.x)) return std::nullopt; // x <= 1
    if (!cut(a.y, d.y)) return std::nullopt;           // y >= 0
    if (!cut(Rational(1) - a.y, -d.y)) return std::nullopt; // y <= 1
    if (cmp(t0, t1) >= 0) return std::nullopt;
    return Segment{a + RatPoint(t0 * d.x, t0 * d.y), a + RatPoint(t1 * d.x, t1 * d.y)};
}

struct HalfEdge {
    int from = 0;
    int to = 0;
    int twin = 0;
    int next = -1;
    bool visited = false;
};

// Counterclockwise-from-positive-x-axis order on directions, exact.
bool direction_less(const RatPoint& u, const RatPoint& v) {
    auto half = [](const RatPoint& w) {
        // 0: upper half (y > 0, or y == 0 and x > 0); 1: lower half
        const int sy = sgn(w.y);
        if (sy > 0) return 0;
        if (sy < 0) return 1;
        return sgn(w.x) > 0 ? 0 : 1;
    };
    const int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return sgn(cross(u, v)) > 0;
}

} // namespace

std::vector<ArrangementFace> arrangement_faces(const std::vector<Segment>& segments) {
    // split every segment at all intersection points with the others
    std::set<std::pair<RatPoint, RatPoint>> unique_edges;
    for (size_t i = 0; i < segments.size(); ++i) {
        std::vector<RatPoint> cuts{segments[i].a, segments[i].b};
        for (size_t j = 0; j < segments.size(); ++j) {
            if (j == i) continue;
            const auto ix = intersect_segments(segments[i], segments[j]);
            if (ix.kind == SegmentIntersection::Kind::Point) {
                cuts.push_back(ix.p);
            } else if (ix.kind == SegmentIntersection::Kind::Overlap) {
                cuts.push_back(ix.q0);
                cuts.push_back(ix.q1);
            }
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (size_t p = 0; p + 1 < cuts.size(); ++p) {
            unique_edges.insert({cuts[p], cuts[p + 1]}); // already lex-ordered pair
        }
    }

    // index vertices
    std::map<RatPoint, int> vertex_id;
    std::vector<RatPoint> vertex;
    auto vid = [&](const RatPoint& p) {
        auto it = vertex_id.find(p);
        if (it != vertex_id.end()) return it->second;
        const int id = static_cast<int>(vertex.size());
        vertex_id.emplace(p, id);
        vertex.push_back(p);
        return id;
    };

    std::vector<HalfEdge> he;
    std::vector<std::vector<int>> outgoing; // per vertex, half-edge ids
    auto ensure_vertex = [&](int id) {
        if (static_cast<size_t>(id) >= outgoing.size()) outgoing.resize(id + 1);
    };
    for (const auto& e : unique_edges) {
        const int u = vid(e.first);
        const int v = vid(e.second);
        const int h1 = static_cast<int>(he.size());
        he.push_back({u, v, h1 + 1});
        he.push_back({v, u, h1});
        ensure_vertex(std::max(u, v));
        outgoing[u].push_back(h1);
        outgoing[v].push_back(h1 + 1);
    }

    // sort outgoing edges counterclockwise, then wire next pointers:
    // successor of (u -> v) is the edge leaving v clockwise-next after (v -> u)
    for (size_t v = 0; v < outgoing.size(); ++v) {
        auto& out = outgoing[v];
        std::sort(out.begin(), out.end(), [&](int h1, int h2) {
            const RatPoint d1 = vertex[he[h1].to] - vertex[he[h1].from];
            const RatPoint d2 = vertex[he[h2].to] - vertex[he[h2].from];
            return direction_less(d1, d2);
        });
        for (size_t pos = 0; pos < out.size(); ++pos) {
            const int h = out[pos];                  // h leaves v
            const int prev = out[(pos + out.size() - 1) % out.size()];
            he[he[h].twin].next = prev;              // twin(h) arrives at v
        }
    }

    std::vector<ArrangementFace> faces;
    for (size_t start = 0; start < he.size(); ++start) {
        if (he[start].visited) continue;
        Loop loop;
        int h = static_cast<int>(start);
        do {
            he[h].visited = true;
            loop.push_back(vertex[he[h].from]);
            h = he[h].next;
            if (h < 0) throw InvariantViolationError("arrangement face walk broke");
        } while (h != static_cast<int>(start));
        const Rational a = signed_area(loop);
        if (sgn(a) > 0) {
            faces.push_back({std::move(loop), a});
        }
    }
    return faces;
}

std::vector<Segment> unit_cell_segments(const IntegerPolygonalSet& omega) {
    std::vector<Segment> segs;
    for (const auto& [ia, ib] : omega.iedges()) {
        const long long zx_lo = -std::max(ia.x, ib.x);
        const long long zx_hi = 1 - std::min(ia.x, ib.x);
        const long long zy_lo = -std::max(ia.y, ib.y);
        const long long zy_hi = 1 - std::min(ia.y, ib.y);
        for (long long zx = zx_lo; zx <= zx_hi; ++zx) {
            for (long long zy = zy_lo; zy <= zy_hi; ++zy) {
                const RatPoint a(ia.x + zx, ia.y + zy);
                const RatPoint b(ib.x + zx, ib.y + zy);
                if (auto clipped = clip_to_unit_square(a, b)) {
                    segs.push_back(*clipped);
                }
            }
        }
    }
    segs.push_back({RatPoint(0, 0), RatPoint(1, 0)});
    segs.push_back({RatPoint(1, 0), RatPoint(1, 1)});
    segs.push_back({RatPoint(1, 1), RatPoint(0, 1)});
    segs.push_back({RatPoint(0, 1), RatPoint(0, 0)});
    return segs;
}

UnitCellPartition unit_cell_partition(const IntegerPolygonalSet& omega) {
    const auto raw = arrangement_faces(unit_cell_segments(omega));

    UnitCellPartition part;
    Rational total(0);
    for (const auto& f : raw) {
        total += f.face_area;
        part.faces.push_back({f.boundary, interior_point(f.boundary), f.face_area});
    }
    if (total != Rational(1)) {
        throw InvariantViolationError("unit cell faces do not add up to area 1");
    }
    std::sort(part.faces.begin(), part.faces.end(), [](const Face& a, const Face& b) {
        return a.representative < b.representative;
    });

    part.face_count = static_cast<int>(part.faces.size());
    const auto params = compute_parameters(part.face_count);
    part.k = params.k;
    part.n = params.n;
    return part;
}

} // namespace polytile
