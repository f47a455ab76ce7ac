#include "polytile/earthquake.hpp"

#include "polytile/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace polytile {

namespace {

long long floordiv(long long x, long long y) {
    long long q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

IVec subgroup_reduce(const Subgroup& h, IVec v) {
    switch (h.rank) {
    case 0:
        return v;
    case 1: {
        const IVec g = h.gen1;
        const long long k = (g.y != 0) ? floordiv(v.y, g.y) : floordiv(v.x, g.x);
        return v - k * g;
    }
    default:
        return h.full->reduce(v);
    }
}

} // namespace

EarthquakeDecomposition earthquake_decomposition(const std::vector<IVec>& tile_points,
                                                 const IntPeriodic& tiling, IVec v) {
    if (v.x == 0 && v.y == 0) throw ValidationError("earthquake direction must be nonzero");

    // linkage displacements: (F - F) + v and (F - F) - v
    std::set<IVec> dlink;
    for (const auto& f1 : tile_points) {
        for (const auto& f2 : tile_points) {
            const IVec d = f1 - f2;
            dlink.insert(d + v);
            dlink.insert(d - v);
        }
    }

    const Lattice& lam = tiling.lattice;
    std::vector<IVec> nodes = tiling.base; // already reduced + sorted
    auto node_of = [&](IVec p) {
        const IVec r = lam.reduce(p);
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), r);
        if (it == nodes.end() || !(*it == r)) return -1;
        return static_cast<int>(it - nodes.begin());
    };

    EarthquakeDecomposition out;
    out.lattice = lam;
    out.direction = v;

    std::vector<int> family_of(nodes.size(), -1);
    std::vector<IVec> phi(nodes.size(), IVec{0, 0});

    for (size_t root = 0; root < nodes.size(); ++root) {
        if (family_of[root] != -1) continue;
        const int fam = static_cast<int>(out.families.size());
        std::vector<IVec> cycles;
        std::deque<int> queue{static_cast<int>(root)};
        family_of[root] = fam;
        phi[root] = {0, 0};
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            for (const auto& d : dlink) {
                const IVec x = nodes[static_cast<size_t>(cur)] + d;
                const int nxt = node_of(x);
                if (nxt < 0) continue;
                const IVec delta = x - nodes[static_cast<size_t>(nxt)];
                const IVec lift = phi[static_cast<size_t>(cur)] + delta;
                if (family_of[static_cast<size_t>(nxt)] == -1) {
                    family_of[static_cast<size_t>(nxt)] = fam;
                    phi[static_cast<size_t>(nxt)] = lift;
                    queue.push_back(nxt);
                } else if (family_of[static_cast<size_t>(nxt)] == fam) {
                    const IVec gamma = lift - phi[static_cast<size_t>(nxt)];
                    if (gamma.x != 0 || gamma.y != 0) cycles.push_back(gamma);
                }
            }
        }
        PlateFamily pf;
        pf.h = subgroup_from_generators(cycles);
        for (size_t i = 0; i < nodes.size(); ++i) {
            if (family_of[i] == fam) pf.nodes.push_back(nodes[i] + phi[i]);
        }
        std::sort(pf.nodes.begin(), pf.nodes.end());
        pf.plate_count = (pf.h.rank == 2) ? pf.h.full->index() / lam.index() : -1;
        out.families.push_back(std::move(pf));
    }

    out.total_plates = 0;
    for (const auto& pf : out.families) {
        if (pf.plate_count < 0) {
            out.total_plates = -1;
            break;
        }
        out.total_plates += pf.plate_count;
    }
    return out;
}

std::vector<std::vector<IVec>> plates_on_window(const EarthquakeDecomposition& decomp,
                                                const IntPeriodic& tiling,
                                                IVec window_lo, IVec window_hi) {
    // rebuild node lookup consistent with the decomposition's construction
    std::vector<IVec> nodes = tiling.base;
    const Lattice& lam = tiling.lattice;

    std::map<IVec, std::pair<int, IVec>> lift_of; // node residue -> (family, lift)
    for (size_t f = 0; f < decomp.families.size(); ++f) {
        for (const auto& lifted : decomp.families[f].nodes) {
            lift_of[lam.reduce(lifted)] = {static_cast<int>(f), lifted};
        }
    }

    std::map<std::pair<int, IVec>, std::vector<IVec>> plates;
    for (long long y = window_lo.y; y <= window_hi.y; ++y) {
        for (long long x = window_lo.x; x <= window_hi.x; ++x) {
            const IVec t{x, y};
            const auto it = lift_of.find(lam.reduce(t));
            if (it == lift_of.end()) continue;
            const auto& [fam, lifted] = it->second;
            const IVec w = t - lifted; // in lam by construction
            const IVec coset = subgroup_reduce(decomp.families[static_cast<size_t>(fam)].h, w);
            plates[{fam, coset}].push_back(t);
        }
    }

    std::vector<std::vector<IVec>> out;
    for (auto& [key, pts] : plates) {
        std::sort(pts.begin(), pts.end());
        out.push_back(std::move(pts));
    }
    return out;
}

} // namespace polytile
