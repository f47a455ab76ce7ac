#include "polytile/patch.hpp"

#include "polytile/errors.hpp"

#include <algorithm>

namespace polytile {

namespace {

class PatchSearch {
public:
    PatchSearch(const std::vector<IVec>& tile, long long r) : tile_(tile), r_(r) {
        IVec lo = tile.front(), hi = tile.front();
        for (const auto& p : tile) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
        // placements that can touch the core, occupancy over the touched area
        grid_lo_ = {-r - (hi.x - lo.x), -r - (hi.y - lo.y)};
        grid_hi_ = {r + (hi.x - lo.x), r + (hi.y - lo.y)};
        width_ = grid_hi_.x - grid_lo_.x + 1;
        height_ = grid_hi_.y - grid_lo_.y + 1;
        occupied_.assign(static_cast<size_t>(width_ * height_), 0);

        const long long side = 2 * r + 1;
        core_covered_.assign(static_cast<size_t>(side * side), 0);
        covering_.resize(static_cast<size_t>(side * side));

        for (long long uy = -r - hi.y; uy <= r - lo.y; ++uy) {
            for (long long ux = -r - hi.x; ux <= r - lo.x; ++ux) {
                const IVec u{ux, uy};
                bool touches = false;
                for (const auto& f : tile_) {
                    if (in_core(f + u)) {
                        touches = true;
                        break;
                    }
                }
                if (!touches) continue;
                const int id = static_cast<int>(placements_.size());
                placements_.push_back(u);
                for (const auto& f : tile_) {
                    const IVec p = f + u;
                    if (in_core(p)) covering_[core_id(p)].push_back(id);
                }
            }
        }
    }

    std::optional<std::vector<IVec>> run() {
        if (dfs()) {
            std::vector<IVec> out;
            for (const int id : placed_) out.push_back(placements_[static_cast<size_t>(id)]);
            std::sort(out.begin(), out.end());
            return out;
        }
        return std::nullopt;
    }

private:
    bool in_core(IVec p) const {
        return -r_ <= p.x && p.x <= r_ && -r_ <= p.y && p.y <= r_;
    }
    size_t core_id(IVec p) const {
        const long long side = 2 * r_ + 1;
        return static_cast<size_t>((p.y + r_) * side + (p.x + r_));
    }
    size_t grid_id(IVec p) const {
        return static_cast<size_t>((p.y - grid_lo_.y) * width_ + (p.x - grid_lo_.x));
    }

    bool fits(int id) const {
        const IVec u = placements_[static_cast<size_t>(id)];
        for (const auto& f : tile_) {
            if (occupied_[grid_id(f + u)]) return false;
        }
        return true;
    }

    void apply(int id, bool place) {
        const IVec u = placements_[static_cast<size_t>(id)];
        const char v = place ? 1 : 0;
        for (const auto& f : tile_) {
            const IVec p = f + u;
            occupied_[grid_id(p)] = v;
            if (in_core(p)) {
                core_covered_[core_id(p)] = v;
                core_count_ += place ? 1 : -1;
            }
        }
    }

    bool dfs() {
        const long long side = 2 * r_ + 1;
        if (core_count_ == side * side) return true;

        size_t best_cell = core_covered_.size();
        int best_count = -1;
        for (size_t c = 0; c < core_covered_.size(); ++c) {
            if (core_covered_[c]) continue;
            int count = 0;
            for (const int id : covering_[c]) {
                if (fits(id)) ++count;
            }
            if (count == 0) return false;
            if (best_count < 0 || count < best_count) {
                best_count = count;
                best_cell = c;
                if (count == 1) break;
            }
        }

        for (const int id : covering_[best_cell]) {
            if (!fits(id)) continue;
            apply(id, true);
            placed_.push_back(id);
            if (dfs()) return true;
            placed_.pop_back();
            apply(id, false);
        }
        return false;
    }

    std::vector<IVec> tile_;
    long long r_;
    IVec grid_lo_, grid_hi_;
    long long width_ = 0, height_ = 0;
    std::vector<char> occupied_;
    std::vector<char> core_covered_;
    long long core_count_ = 0;
    std::vector<IVec> placements_;
    std::vector<std::vector<int>> covering_;
    std::vector<int> placed_;
};

} // namespace

PatchResult patch_tileable(const std::vector<IVec>& tile_points, long long radius) {
    if (radius < 1) throw InvariantViolationError("patch radius must be positive");
    if (tile_points.empty()) return {false, {}};
    PatchSearch search(tile_points, radius);
    if (auto witness = search.run()) {
        return {true, std::move(*witness)};
    }
    return {false, {}};
}

} // namespace polytile
