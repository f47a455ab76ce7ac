#include "polytile/periodicity.hpp"

#include "polytile/errors.hpp"

#include <algorithm>
#include <numeric>

namespace polytile {

namespace {

// canonical generator of a rank-1 rational period module
RatPoint canonical_gen(const RatPoint& g) {
    const int sy = sgn(g.y);
    if (sy < 0 || (sy == 0 && sgn(g.x) < 0)) return RatPoint(0, 0) - g;
    return g;
}

bool same_module(const Component& a, const Component& b) {
    if (a.rank() != b.rank()) return false;
    if (a.rank() == 2) {
        return rat_lattice_from_generators(a.periods) ==
               rat_lattice_from_generators(b.periods);
    }
    return canonical_gen(a.periods.front()) == canonical_gen(b.periods.front());
}

// a + h == b as sets
bool shifted_equal(const Component& a, const RatPoint& h, const Component& b) {
    if (!same_module(a, b)) return false;
    for (const auto& p : a.base) {
        if (!b.contains(p + h)) return false;
    }
    for (const auto& p : b.base) {
        if (!a.contains(p - h)) return false;
    }
    return true;
}

} // namespace

bool check_periodicity(const Component& comp, const RatPoint& h) {
    if (sgn(h.x) == 0 && sgn(h.y) == 0) return false;
    return shifted_equal(comp, h, comp);
}

bool check_periodicity(const TilingDesc& desc, const RatPoint& h) {
    if (sgn(h.x) == 0 && sgn(h.y) == 0) return false;
    if (desc.kind == TilingDesc::Kind::Periodic) {
        // h must permute the base residues
        for (const auto& b : desc.base) {
            bool hit = false;
            for (const auto& b2 : desc.base) {
                if (desc.lattice.contains((b + h) - b2)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        for (const auto& b : desc.base) {
            bool hit = false;
            for (const auto& b2 : desc.base) {
                if (desc.lattice.contains((b - h) - b2)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        return true;
    }
    // h must permute the components
    for (const auto& c : desc.components) {
        bool hit = false;
        for (const auto& c2 : desc.components) {
            if (shifted_equal(c, h, c2)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

namespace {

bool independent(const RatPoint& a, const RatPoint& b) {
    return sgn(a.x * b.y - a.y * b.x) != 0;
}

} // namespace

PeriodicityReport weak_periodic_report(const TilingDesc& desc) {
    std::vector<RatPoint> candidates;
    if (desc.kind == TilingDesc::Kind::Periodic) {
        const Rational den = rat_of(desc.lattice.den);
        candidates.push_back({rat_of(desc.lattice.num.a) / den, Rational(0)});
        candidates.push_back({rat_of(desc.lattice.num.b) / den,
                              rat_of(desc.lattice.num.d) / den});
    } else {
        for (const auto& c : desc.components) {
            for (const auto& p : c.periods) candidates.push_back(p);
        }
        // common refinement of the component lattices, when they are full rank
        bool all_rank2 = true;
        for (const auto& c : desc.components) {
            if (c.rank() != 2) all_rank2 = false;
        }
        if (all_rank2 && !desc.components.empty()) {
            long long den = 1;
            std::vector<RatLattice> lats;
            for (const auto& c : desc.components) {
                lats.push_back(rat_lattice_from_generators(c.periods));
                den = std::lcm(den, lats.back().den);
            }
            Lattice acc{1, 0, 1};
            bool first = true;
            for (const auto& rl : lats) {
                const long long s = den / rl.den;
                const Lattice scaled{rl.num.a * s, rl.num.b * s, rl.num.d * s};
                acc = first ? scaled : intersect(acc, scaled);
                first = false;
            }
            candidates.push_back({rat_of(acc.a) / rat_of(den), Rational(0)});
            candidates.push_back({rat_of(acc.b) / rat_of(den),
                                  rat_of(acc.d) / rat_of(den)});
        }
    }

    std::vector<RatPoint> verified;
    for (const auto& h : candidates) {
        if (check_periodicity(desc, h)) verified.push_back(h);
    }

    PeriodicityReport report;
    for (size_t i = 0; i < verified.size(); ++i) {
        for (size_t j = i + 1; j < verified.size(); ++j) {
            if (independent(verified[i], verified[j])) {
                report.kind = PeriodicityReport::Kind::DoublyPeriodic;
                report.periods = {verified[i], verified[j]};
                return report;
            }
        }
    }
    if (!verified.empty()) {
        report.kind = PeriodicityReport::Kind::SinglyPeriodic;
        report.periods = {verified.front()};
        return report;
    }
    if (desc.kind == TilingDesc::Kind::Sheared) {
        bool all_verified = true;
        for (const auto& c : desc.components) {
            const RatPoint p = canonical_gen(c.periods.front());
            if (!check_periodicity(c, p)) {
                all_verified = false;
                break;
            }
            report.pieces.push_back({c, p});
        }
        if (all_verified && !report.pieces.empty()) {
            report.kind = PeriodicityReport::Kind::WeaklyPeriodic;
            return report;
        }
        report.pieces.clear();
    }
    report.kind = PeriodicityReport::Kind::NotPeriodic;
    return report;
}

} // namespace polytile
