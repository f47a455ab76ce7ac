#include "polytile/torus_cover.hpp"

#include <algorithm>
#include <set>

namespace polytile {

namespace {

class CoverSearch {
public:
    CoverSearch(const std::vector<IVec>& reduced, const Lattice& lat)
        : lat_(lat), cells_(static_cast<size_t>(lat.index())) {
        const size_t n = cells_;
        masks_.resize(n);
        covering_.resize(n);
        for (size_t u = 0; u < n; ++u) {
            auto& mask = masks_[u];
            mask.assign((n + 63) / 64, 0);
            const IVec uv = cell_of(u);
            for (const auto& f : reduced) {
                const size_t c = id_of(lat_.reduce(f + uv));
                mask[c >> 6] |= (uint64_t{1} << (c & 63));
                covering_[c].push_back(static_cast<int>(u));
            }
        }
        covered_.assign((n + 63) / 64, 0);
    }

    bool run(std::vector<IVec>& solution) {
        if (!dfs()) return false;
        solution.clear();
        for (const int u : placed_) solution.push_back(cell_of(static_cast<size_t>(u)));
        std::sort(solution.begin(), solution.end());
        return true;
    }

private:
    size_t id_of(IVec v) const { return static_cast<size_t>(v.y * lat_.a + v.x); }
    IVec cell_of(size_t id) const {
        const long long i = static_cast<long long>(id);
        return {i % lat_.a, i / lat_.a};
    }

    bool is_covered(size_t c) const { return (covered_[c >> 6] >> (c & 63)) & 1; }

    bool disjoint(const std::vector<uint64_t>& mask) const {
        for (size_t w = 0; w < mask.size(); ++w) {
            if (mask[w] & covered_[w]) return false;
        }
        return true;
    }

    void apply(const std::vector<uint64_t>& mask, bool place) {
        for (size_t w = 0; w < mask.size(); ++w) {
            if (place) {
                covered_[w] |= mask[w];
            } else {
                covered_[w] &= ~mask[w];
            }
        }
        covered_count_ += place ? tile_size_ : -tile_size_;
    }

    bool dfs() {
        if (covered_count_ == static_cast<long long>(cells_)) return true;

        // deficiency-first: the uncovered cell with the fewest usable placements
        size_t best_cell = cells_;
        int best_count = -1;
        for (size_t c = 0; c < cells_; ++c) {
            if (is_covered(c)) continue;
            int count = 0;
            for (const int u : covering_[c]) {
                if (disjoint(masks_[static_cast<size_t>(u)])) ++count;
            }
            if (count == 0) return false;
            if (best_count < 0 || count < best_count) {
                best_count = count;
                best_cell = c;
                if (count == 1) break;
            }
        }

        for (const int u : covering_[best_cell]) {
            const auto& mask = masks_[static_cast<size_t>(u)];
            if (!disjoint(mask)) continue;
            apply(mask, true);
            placed_.push_back(u);
            if (dfs()) return true;
            placed_.pop_back();
            apply(mask, false);
        }
        return false;
    }

    Lattice lat_;
    size_t cells_;
    long long tile_size_ = 0;
    long long covered_count_ = 0;
    std::vector<std::vector<uint64_t>> masks_;
    std::vector<std::vector<int>> covering_;
    std::vector<uint64_t> covered_;
    std::vector<int> placed_;

public:
    void set_tile_size(long long s) { tile_size_ = s; }
};

} // namespace

TorusResult tile_torus(const std::vector<IVec>& tile_points, const Lattice& lat) {
    const long long n = lat.index();
    const long long m = static_cast<long long>(tile_points.size());
    if (m == 0 || n % m != 0) {
        return {TorusOutcome::NotDivisible, std::nullopt};
    }

    std::vector<IVec> reduced;
    reduced.reserve(tile_points.size());
    std::set<IVec> seen;
    for (const auto& p : tile_points) {
        const IVec r = lat.reduce(p);
        if (!seen.insert(r).second) {
            return {TorusOutcome::Collapsed, std::nullopt};
        }
        reduced.push_back(r);
    }

    CoverSearch search(reduced, lat);
    search.set_tile_size(m);
    std::vector<IVec> solution;
    if (!search.run(solution)) {
        return {TorusOutcome::NoCover, std::nullopt};
    }
    return {TorusOutcome::Tiled, TorusTiling{lat, std::move(solution)}};
}

} // namespace polytile
