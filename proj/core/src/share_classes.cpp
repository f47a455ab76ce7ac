#include "polytile/share_classes.hpp"

#include "polytile/errors.hpp"
#include "polytile/lift.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace polytile {

namespace {

long long floordiv(long long x, long long y) {
    long long q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}
long long mod(long long x, long long y) { return x - floordiv(x, y) * y; }

long long xgcd(long long x, long long y, long long& s, long long& t) {
    if (y == 0) {
        s = (x < 0) ? -1 : 1;
        t = 0;
        return std::abs(x);
    }
    long long s1, t1;
    const long long g = xgcd(y, mod(x, y), s1, t1);
    s = t1;
    t = s1 - floordiv(x, y) * t1;
    return g;
}

// Canonical coset representative of v modulo a subgroup.
IVec subgroup_reduce(const Subgroup& h, IVec v) {
    switch (h.rank) {
    case 0:
        return v;
    case 1: {
        const IVec g = h.gen1;
        if (g.y != 0) {
            const long long k = floordiv(v.y, g.y);
            return v - k * g;
        }
        const long long k = floordiv(v.x, g.x);
        return v - k * g;
    }
    default:
        return h.full->reduce(v);
    }
}

// 2x2 integer matrix with determinant +-1.
struct Unimodular {
    long long m[2][2] = {{1, 0}, {0, 1}};

    IVec apply(IVec v) const {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }
    RatPoint apply(const RatPoint& p) const {
        return {rat_of(m[0][0]) * p.x + rat_of(m[0][1]) * p.y,
                rat_of(m[1][0]) * p.x + rat_of(m[1][1]) * p.y};
    }
    long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    Unimodular inverse() const {
        const long long dd = det();
        Unimodular inv;
        inv.m[0][0] = dd * m[1][1];
        inv.m[0][1] = -dd * m[0][1];
        inv.m[1][0] = -dd * m[1][0];
        inv.m[1][1] = dd * m[0][0];
        return inv;
    }
};

// Maps the primitive direction v to (0, 1); determinant +1.
Unimodular direction_to_vertical(IVec v) {
    long long s, t;
    const long long g = xgcd(v.x, v.y, s, t);
    if (g != 1) throw InvariantViolationError("direction is not primitive");
    Unimodular u;
    u.m[0][0] = v.y;
    u.m[0][1] = -v.x;
    u.m[1][0] = s;
    u.m[1][1] = t;
    return u;
}

IVec primitive_direction(IVec v) {
    if (v.x == 0 && v.y == 0) throw InvariantViolationError("zero direction");
    const long long g = std::gcd(std::abs(v.x), std::abs(v.y));
    IVec p{v.x / g, v.y / g};
    if (p.y < 0 || (p.y == 0 && p.x < 0)) p = -p;
    return p;
}

PolygonalSet transform_set(const PolygonalSet& s, const Unimodular& u) {
    std::vector<PolygonWithHoles> out;
    for (const auto& poly : s.polygons) {
        PolygonWithHoles t;
        auto map_loop = [&](const Loop& loop) {
            Loop m;
            for (const auto& p : loop) m.push_back(u.apply(p));
            return m;
        };
        t.outer = map_loop(poly.outer);
        for (const auto& h : poly.holes) t.holes.push_back(map_loop(h));
        out.push_back(std::move(t));
    }
    return make_polygonal_set(std::move(out));
}

TilingDesc transform_desc(const TilingDesc& desc, const Unimodular& u) {
    TilingDesc out = desc;
    auto map_points = [&](std::vector<RatPoint>& pts) {
        for (auto& p : pts) p = u.apply(p);
    };
    if (desc.kind == TilingDesc::Kind::Periodic) {
        map_points(out.base);
        const Rational den = rat_of(desc.lattice.den);
        std::vector<RatPoint> gens = {
            u.apply(RatPoint(rat_of(desc.lattice.num.a) / den, Rational(0))),
            u.apply(RatPoint(rat_of(desc.lattice.num.b) / den,
                             rat_of(desc.lattice.num.d) / den))};
        out.lattice = rat_lattice_from_generators(gens);
    } else {
        for (auto& c : out.components) {
            map_points(c.base);
            map_points(c.periods);
        }
        out.direction = u.apply(desc.direction);
    }
    return out;
}

// Scaled integer model: the translate set modulo its invariance lattice.
struct ScaledModel {
    long long q = 1;
    Lattice lam;
    std::vector<IVec> nodes; // residues, sorted

    int node_of(IVec p) const {
        const IVec r = lam.reduce(p);
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), r);
        if (it == nodes.end() || !(*it == r)) return -1;
        return static_cast<int>(it - nodes.begin());
    }
};

ScaledModel build_model(const TilingDesc& desc) {
    ScaledModel model;
    model.q = desc.denominator();
    const TilingDesc scaled = desc.scaled(model.q);
    model.lam = invariance_lattice(scaled);

    std::set<IVec> residues;
    auto to_ivec = [](const RatPoint& p) {
        return IVec{rational_to_int64(p.x), rational_to_int64(p.y)};
    };
    if (scaled.kind == TilingDesc::Kind::Periodic) {
        for (const auto& b : scaled.base) {
            residues.insert(model.lam.reduce(to_ivec(b)));
        }
    } else {
        for (const auto& c : scaled.components) {
            const RatLattice comp_lat = rat_lattice_from_generators(c.periods);
            for (const auto& tau : coset_representatives(comp_lat.num, model.lam)) {
                for (const auto& b : c.base) {
                    residues.insert(model.lam.reduce(to_ivec(b) + tau));
                }
            }
        }
    }
    model.nodes.assign(residues.begin(), residues.end());
    return model;
}

// Vertex difference set of the scaled integer set (tile translated copies
// share a vertex iff their difference lies here).
std::vector<IVec> vertex_difference_set(const IntegerPolygonalSet& omega, long long q) {
    const auto vs = omega.ivertices();
    std::set<IVec> diffs;
    for (const auto& v : vs) {
        for (const auto& w : vs) {
            const IVec d = q * (v - w);
            if (d.x != 0 || d.y != 0) diffs.insert(d);
        }
    }
    return {diffs.begin(), diffs.end()};
}

struct QuotientComponents {
    std::vector<int> family_of;  // per node
    std::vector<IVec> phi;       // per node: lift displacement
    std::vector<Subgroup> h;     // per family
    int family_count = 0;
};

// Connected components of the linkage graph on the quotient, with cycle
// displacements folded into a subgroup per component.
QuotientComponents quotient_components(const ScaledModel& model,
                                       const std::vector<IVec>& diffs) {
    const int n = static_cast<int>(model.nodes.size());
    QuotientComponents out;
    out.family_of.assign(n, -1);
    out.phi.assign(n, {0, 0});

    for (int root = 0; root < n; ++root) {
        if (out.family_of[root] != -1) continue;
        const int fam = out.family_count++;
        std::vector<IVec> cycles;
        std::deque<int> queue{root};
        out.family_of[root] = fam;
        out.phi[root] = {0, 0};
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            const IVec pos = model.nodes[static_cast<size_t>(cur)];
            for (const auto& d : diffs) {
                const IVec x = pos + d;
                const int nxt = model.node_of(x);
                if (nxt < 0) continue;
                const IVec delta = x - model.nodes[static_cast<size_t>(nxt)];
                const IVec lift = out.phi[static_cast<size_t>(cur)] + delta;
                if (out.family_of[static_cast<size_t>(nxt)] == -1) {
                    out.family_of[static_cast<size_t>(nxt)] = fam;
                    out.phi[static_cast<size_t>(nxt)] = lift;
                    queue.push_back(nxt);
                } else {
                    const IVec gamma = lift - out.phi[static_cast<size_t>(nxt)];
                    if (gamma.x != 0 || gamma.y != 0) cycles.push_back(gamma);
                }
            }
        }
        out.h.push_back(subgroup_from_generators(cycles));
    }
    return out;
}

Rational descale(long long v, long long q) { return rat_of(v) / rat_of(q); }

RatPoint descale_point(IVec v, long long q) {
    return {descale(v.x, q), descale(v.y, q)};
}

} // namespace

ClassPartition vertex_share_classes(const IntegerPolygonalSet& omega,
                                    const TilingDesc& desc) {
    const ScaledModel model = build_model(desc);
    const auto diffs = vertex_difference_set(omega, model.q);
    const auto comps = quotient_components(model, diffs);

    ClassPartition out;
    out.scale = model.q;
    out.global_scaled = model.lam;
    out.families.resize(static_cast<size_t>(comps.family_count));

    for (int f = 0; f < comps.family_count; ++f) {
        ClassFamily& fam = out.families[static_cast<size_t>(f)];
        fam.h_scaled = comps.h[static_cast<size_t>(f)];
        if (fam.h_scaled.rank == 2) {
            fam.class_count = fam.h_scaled.full->index() / model.lam.index();
        } else {
            fam.class_count = -1;
        }
    }
    for (size_t i = 0; i < model.nodes.size(); ++i) {
        const int f = comps.family_of[i];
        out.families[static_cast<size_t>(f)].representative.base.push_back(
            descale_point(model.nodes[i] + comps.phi[i], model.q));
    }
    for (auto& fam : out.families) {
        std::sort(fam.representative.base.begin(), fam.representative.base.end());
        const Subgroup& h = fam.h_scaled;
        if (h.rank >= 1) {
            fam.representative.periods.push_back(descale_point(h.gen1, model.q));
        }
        if (h.rank == 2) {
            fam.representative.periods.push_back(
                descale_point(h.full->w(), model.q));
        }
    }

    out.total_classes = 0;
    for (const auto& fam : out.families) {
        if (fam.class_count < 0) {
            out.total_classes = -1;
            break;
        }
        out.total_classes += fam.class_count;
    }

    // membership tables
    out.nodes_scaled = model.nodes;
    out.node_family = comps.family_of;
    out.node_phi = comps.phi;
    return out;
}

ClassKey class_key_of(const ClassPartition& classes, const RatPoint& translate) {
    const Rational sx = rat_of(classes.scale) * translate.x;
    const Rational sy = rat_of(classes.scale) * translate.y;
    if (!is_integer(sx) || !is_integer(sy)) return {};
    const IVec p{rational_to_int64(sx), rational_to_int64(sy)};
    const IVec r = classes.global_scaled.reduce(p);
    const auto it = std::lower_bound(classes.nodes_scaled.begin(),
                                     classes.nodes_scaled.end(), r);
    if (it == classes.nodes_scaled.end() || !(*it == r)) return {};
    const size_t n = static_cast<size_t>(it - classes.nodes_scaled.begin());
    const int fam = classes.node_family[n];
    const IVec lift = classes.nodes_scaled[n] + classes.node_phi[n];
    const IVec w = p - lift;
    return {fam, subgroup_reduce(classes.families[static_cast<size_t>(fam)].h_scaled, w)};
}

namespace {

struct StripGeometry {
    long long lo = 0;    // strip interval in transformed, scaled coordinates
    long long hi = 0;
    long long hf = 0;    // vertical period of the class
    std::vector<IVec> points; // lifted base points of the representative class
};

// x-extent of the scaled transformed tile.
std::pair<long long, long long> x_extent(const IntegerPolygonalSet& omega, long long q) {
    const auto [lo, hi] = omega.bounding_box();
    return {q * lo.x, q * hi.x};
}

} // namespace

std::optional<IVec> sliding_direction(const IntegerPolygonalSet& omega,
                                      const TilingDesc& desc,
                                      const ClassPartition& classes) {
    if (classes.single_class()) return std::nullopt;

    std::optional<IVec> dir;
    for (const auto& fam : classes.families) {
        if (fam.h_scaled.rank != 1) {
            throw InvariantViolationError(
                "multiple vertex classes without a one-dimensional slide group");
        }
        const IVec d = primitive_direction(fam.h_scaled.gen1);
        if (dir && !(*dir == d)) {
            throw InvariantViolationError("vertex classes slide in different directions");
        }
        dir = d;
    }

    // verify that every class union is a full open strip in that direction
    const Unimodular u = direction_to_vertical(*dir);
    const PolygonalSet omega_t = transform_set(omega.base, u);
    const Rational tile_area = area(omega_t) * rat_of(classes.scale) * rat_of(classes.scale);

    Rational olo, ohi;
    {
        bool first = true;
        for (const auto& v : omega_t.vertices()) {
            const Rational x = rat_of(classes.scale) * v.x;
            if (first || cmp(x, olo) < 0) olo = x;
            if (first || cmp(x, ohi) > 0) ohi = x;
            first = false;
        }
    }

    for (const auto& fam : classes.families) {
        const IVec gen_t = u.apply(fam.h_scaled.gen1);
        if (gen_t.x != 0) {
            throw InvariantViolationError("slide group not parallel to slide direction");
        }
        const long long hf = std::abs(gen_t.y);
        Rational lo, hi;
        bool first = true;
        for (size_t i = 0; i < classes.nodes_scaled.size(); ++i) {
            if (classes.node_family[i] !=
                static_cast<int>(&fam - classes.families.data())) {
                continue;
            }
            const IVec t = u.apply(classes.nodes_scaled[i] + classes.node_phi[i]);
            const Rational x = rat_of(t.x);
            if (first || cmp(x + olo, lo) < 0) lo = x + olo;
            if (first || cmp(x + ohi, hi) > 0) hi = x + ohi;
            first = false;
        }
        long long count = 0;
        for (size_t i = 0; i < classes.nodes_scaled.size(); ++i) {
            if (classes.node_family[i] ==
                static_cast<int>(&fam - classes.families.data())) {
                ++count;
            }
        }
        // translate count per vertical period * tile area == strip area
        if (rat_of(count) * tile_area != (hi - lo) * rat_of(hf)) {
            throw InvariantViolationError("class union is not a full strip");
        }
    }
    return dir;
}

namespace {

struct CircleStrip {
    int family = -1;
    IVec lambda{0, 0};      // lattice shift from the family representative
    long long lo = 0;       // normalized into [0, P)
    long long width = 0;
    long long hf = 0;
    std::vector<IVec> points; // lifted class points (with lambda applied)
    long long offset = 0;     // assigned slide, scaled transformed coordinates
    bool assigned = false;
};

// Minimal nonnegative vertex height of the class on the vertical line x = c,
// modulo the class's vertical period.
std::optional<long long> vertex_height_on_line(const CircleStrip& strip,
                                               const std::vector<IVec>& tile_vertices,
                                               long long c) {
    std::optional<long long> best;
    for (const auto& p : strip.points) {
        for (const auto& v0 : tile_vertices) {
            if (v0.x + p.x != c) continue;
            const long long y = mod(v0.y + p.y, strip.hf);
            if (!best || y < *best) best = y;
        }
    }
    return best;
}

} // namespace

MergeResult merge_by_sliding(const IntegerPolygonalSet& omega, const TilingDesc& desc) {
    if (!desc.contains(RatPoint(0, 0))) {
        throw ValidationError("merge requires the origin in the translate set");
    }
    const ClassPartition classes = vertex_share_classes(omega, desc);

    if (classes.single_class()) {
        if (!desc.is_integral()) {
            throw InvariantViolationError(
                "single-class tiling through the origin must be integral");
        }
        MergeResult out;
        const ScaledModel model = build_model(desc);
        std::vector<RatPoint> base;
        for (const auto& r : model.nodes) base.push_back(to_rat(r));
        out.merged = TilingDesc::periodic(std::move(base), RatLattice{model.lam, 1});
        out.direction = {0, 1};
        out.offsets.push_back({classes.families.front().representative, Rational(0)});
        return out;
    }

    const auto dir_opt = sliding_direction(omega, desc, classes);
    const IVec dir = *dir_opt;
    const Unimodular u = direction_to_vertical(dir);
    const Unimodular uinv = u.inverse();

    // transformed, scaled world
    const long long q = classes.scale;
    const PolygonalSet omega_t_base = transform_set(omega.base, u);
    std::vector<IVec> tile_vertices;
    for (const auto& v : omega_t_base.vertices()) {
        tile_vertices.push_back({q * rational_to_int64(v.x), q * rational_to_int64(v.y)});
    }
    long long olo = tile_vertices.front().x, ohi = olo;
    for (const auto& v : tile_vertices) {
        olo = std::min(olo, v.x);
        ohi = std::max(ohi, v.x);
    }

    std::vector<IVec> lam_gens = {u.apply(classes.global_scaled.u()),
                                  u.apply(classes.global_scaled.w())};
    const Lattice lam_t = lattice_from_generators(lam_gens);
    const long long period = lam_t.a;
    const long long g_shift = std::gcd(lam_t.a, lam_t.b == 0 ? lam_t.a : lam_t.b);
    long long s0, t0;
    xgcd(lam_t.a, lam_t.b == 0 ? lam_t.a : lam_t.b, s0, t0);
    // lambda_unit has x-component g_shift
    const IVec lambda_unit =
        (lam_t.b == 0) ? IVec{lam_t.a, 0}
                       : IVec{s0 * lam_t.a + t0 * lam_t.b, t0 * lam_t.d};

    // vertical coset collapse guard: the lattice's vertical period must slide
    // each class onto itself
    const long long vp = lam_t.vertical_period();

    std::vector<CircleStrip> strips;
    for (size_t f = 0; f < classes.families.size(); ++f) {
        const auto& fam = classes.families[f];
        const IVec gen_t = u.apply(fam.h_scaled.gen1);
        const long long hf = std::abs(gen_t.y);
        if (mod(vp, hf) != 0) {
            throw UnsupportedDescriptionError("lattice vertical period escapes a class");
        }
        std::vector<IVec> pts;
        for (size_t i = 0; i < classes.nodes_scaled.size(); ++i) {
            if (classes.node_family[i] != static_cast<int>(f)) continue;
            pts.push_back(u.apply(classes.nodes_scaled[i] + classes.node_phi[i]));
        }
        long long lo = pts.front().x, hi = lo;
        for (const auto& p : pts) {
            lo = std::min(lo, p.x);
            hi = std::max(hi, p.x);
        }
        lo += olo;
        hi += ohi;

        for (long long k = 0; k < period / g_shift; ++k) {
            CircleStrip strip;
            strip.family = static_cast<int>(f);
            strip.lambda = k * lambda_unit;
            strip.lo = mod(lo + k * g_shift, period);
            strip.width = hi - lo;
            strip.hf = hf;
            for (const auto& p : pts) strip.points.push_back(p + strip.lambda);
            strips.push_back(std::move(strip));
        }
    }

    // strips must tile the circle of circumference `period`
    {
        long long total = 0;
        for (const auto& s : strips) total += s.width;
        if (total != period) {
            throw UnsupportedDescriptionError("class strips do not add up to one period");
        }
    }
    std::sort(strips.begin(), strips.end(), [](const CircleStrip& a, const CircleStrip& b) {
        return a.lo < b.lo;
    });
    for (size_t i = 0; i < strips.size(); ++i) {
        const auto& cur = strips[i];
        const auto& nxt = strips[(i + 1) % strips.size()];
        const long long expected = (i + 1 == strips.size()) ? nxt.lo + period : nxt.lo;
        if (cur.lo + cur.width != expected) {
            throw UnsupportedDescriptionError("class strips do not abut");
        }
    }

    // walk outward from the strip containing x = 0, assigning offsets so that
    // each new strip shares a vertex with its processed neighbour
    const size_t count = strips.size();
    auto strip_at = [&](long long lo_mod) -> size_t {
        for (size_t i = 0; i < count; ++i) {
            if (strips[i].lo == lo_mod) return i;
        }
        throw InvariantViolationError("strip lookup failed");
    };

    size_t start = count; // strip whose lifted instance contains x = 0
    long long start_shift = 0;
    for (size_t i = 0; i < count; ++i) {
        if (strips[i].lo == 0) {
            start = i;
            start_shift = 0;
            break;
        }
        if (strips[i].lo + strips[i].width > period) { // wraps around the seam
            start = i;
            start_shift = -period;
            break;
        }
    }
    if (start == count) {
        // 0 lies strictly inside the last strip's wrap; fall back to the first
        start = 0;
        start_shift = 0;
    }

    strips[start].offset = 0;
    strips[start].assigned = true;
    size_t assigned = 1;

    // Heights are computed in each strip's canonical frame: lifted instances
    // differ from the canonical copy by horizontal lattice shifts only, so the
    // vertex heights on corresponding seams agree.
    auto align = [&](size_t from, long long seam_from, size_t to, long long seam_to) {
        const auto ya = vertex_height_on_line(strips[from], tile_vertices, seam_from);
        const auto yb = vertex_height_on_line(strips[to], tile_vertices, seam_to);
        if (!ya || !yb) {
            throw InvariantViolationError("adjacent strips have no vertices on the seam");
        }
        if (!strips[to].assigned) {
            strips[to].offset = strips[from].offset + *ya - *yb;
            strips[to].assigned = true;
            ++assigned;
        }
    };

    long long right_edge = strips[start].lo + start_shift + strips[start].width;
    long long left_edge = strips[start].lo + start_shift;
    size_t right_strip = start;
    size_t left_strip = start;
    int guard = 0;
    while (assigned < count) {
        if (++guard > 4 * static_cast<int>(count) + 8) {
            throw InvariantViolationError("strip walk failed to assign every class");
        }
        const long long dist_right = right_edge;   // next right strip starts here
        const long long dist_left = -left_edge;    // next left strip ends here
        if (dist_right <= dist_left) {
            const size_t nxt = strip_at(mod(right_edge, period));
            align(right_strip, strips[right_strip].lo + strips[right_strip].width,
                  nxt, strips[nxt].lo);
            right_strip = nxt;
            right_edge += strips[nxt].width;
        } else {
            // the strip whose canonical copy ends at this circle point
            const long long lo_mod = mod(left_edge, period);
            size_t nxt = count;
            for (size_t i = 0; i < count; ++i) {
                if (mod(strips[i].lo + strips[i].width, period) == lo_mod) {
                    nxt = i;
                    break;
                }
            }
            if (nxt == count) throw InvariantViolationError("left strip lookup failed");
            align(left_strip, strips[left_strip].lo,
                  nxt, strips[nxt].lo + strips[nxt].width);
            left_strip = nxt;
            left_edge -= strips[nxt].width;
        }
    }

    // assemble the merged description: every strip slid by its offset
    std::set<IVec> residues;
    for (const auto& s : strips) {
        for (const auto& p : s.points) {
            for (long long j = 0; j < vp / s.hf; ++j) {
                residues.insert(lam_t.reduce(p + IVec{0, s.offset + j * s.hf}));
            }
        }
    }

    MergeResult out;
    out.direction = dir;
    std::vector<RatPoint> base;
    for (const auto& r : residues) {
        const RatPoint orig = uinv.apply(descale_point(r, q));
        if (!is_integer(orig.x) || !is_integer(orig.y)) {
            throw InvariantViolationError("merged tiling is not integral");
        }
        base.push_back(orig);
    }
    std::vector<RatPoint> lat_gens = {uinv.apply(descale_point(lam_t.u(), q)),
                                      uinv.apply(descale_point(lam_t.w(), q))};
    const RatLattice merged_lat = rat_lattice_from_generators(lat_gens);
    if (merged_lat.den != 1) {
        throw InvariantViolationError("merged lattice is not integral");
    }
    out.merged = TilingDesc::periodic(std::move(base), merged_lat);

    for (const auto& s : strips) {
        Component comp;
        for (const auto& p : s.points) {
            comp.base.push_back(uinv.apply(descale_point(p, q)));
        }
        std::sort(comp.base.begin(), comp.base.end());
        comp.periods.push_back(uinv.apply(descale_point({0, s.hf}, q)));
        comp.slide_offset = descale(s.offset, q);
        out.offsets.push_back({std::move(comp), descale(s.offset, q)});
    }

    // the merged set must be a tiling again and one class over the integers
    if (!verify_continuous_tiling(omega, out.merged).ok) {
        throw UnsupportedDescriptionError("per-orbit slide offsets are inconsistent");
    }
    const ClassPartition merged_classes = vertex_share_classes(omega, out.merged);
    if (!merged_classes.single_class()) {
        throw InvariantViolationError("merged tiling still has several classes");
    }
    return out;
}

} // namespace polytile
