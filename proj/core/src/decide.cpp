#include "polytile/decide.hpp"

#include "polytile/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <future>

namespace polytile {

uint64_t tile_hash(const DiscreteTile& tile) {
    uint64_t h = 1469598103934665603ULL; // FNV-1a
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (i * 8)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<uint64_t>(tile.scale));
    for (const auto& p : tile.points) {
        mix(static_cast<uint64_t>(p.x));
        mix(static_cast<uint64_t>(p.y));
    }
    return h;
}

Decision decide(const DiscreteTile& tile, std::optional<long long> budget,
                const std::optional<SessionState>& resume, int threads) {
    if (tile.points.empty()) {
        throw ValidationError("cannot decide an empty tile");
    }
    threads = std::max(1, threads);
    const long long m = static_cast<long long>(tile.points.size());
    const uint64_t hash = tile_hash(tile);

    SessionState st;
    st.tile_hash = hash;
    if (resume) {
        if (resume->tile_hash != hash) {
            throw ValidationError("resume state belongs to a different tile");
        }
        st = *resume;
    }

    LatticeStream stream;
    stream.fast_forward(st.lattice_cursor);

    DecideStats& stats = st.stats;
    auto spent = [&]() { return budget && stats.work_units >= *budget; };
    auto suspend = [&]() {
        st.lattice_cursor = stream.position();
        Decision d;
        d.kind = Decision::Kind::Undecided;
        d.state = st;
        d.stats = stats;
        return d;
    };

    for (;; ++st.round, st.patch_pending = false) {
        const long long cap = st.round * m;

        if (!st.patch_pending) {
            // every lattice of index <= cap, in enumeration order
            for (;;) {
                std::vector<Lattice> batch;
                while (static_cast<int>(batch.size()) < threads &&
                       stream.peek_index() <= cap) {
                    if (budget &&
                        stats.work_units + static_cast<long long>(batch.size()) >= *budget) {
                        break;
                    }
                    const Lattice lat = stream.next();
                    if (lat.index() % m == 0) {
                        batch.push_back(lat); // others are skipped for free
                    }
                }
                if (batch.empty()) {
                    if (stream.peek_index() > cap) break; // phase complete
                    return suspend();                     // budget ran out
                }

                std::vector<TorusResult> results(batch.size());
                if (threads == 1 || batch.size() == 1) {
                    for (size_t i = 0; i < batch.size(); ++i) {
                        results[i] = tile_torus(tile.points, batch[i]);
                    }
                } else {
                    std::vector<std::future<TorusResult>> futs;
                    futs.reserve(batch.size());
                    for (const auto& lat : batch) {
                        futs.push_back(std::async(std::launch::async, [&, lat]() {
                            return tile_torus(tile.points, lat);
                        }));
                    }
                    for (size_t i = 0; i < batch.size(); ++i) results[i] = futs[i].get();
                }
                stats.lattices_tried += static_cast<long long>(batch.size());
                stats.work_units += static_cast<long long>(batch.size());
                // deterministic reduction: first success in enumeration order
                for (const auto& r : results) {
                    if (r.outcome == TorusOutcome::Tiled) {
                        Decision d;
                        d.kind = Decision::Kind::Tileable;
                        d.certificate = r.tiling;
                        d.stats = stats;
                        return d;
                    }
                }
            }
            st.patch_pending = true;
        }

        if (spent()) return suspend();
        ++stats.patches_tried;
        ++stats.work_units;
        const PatchResult pr = patch_tileable(tile.points, st.round);
        if (!pr.coverable) {
            Decision d;
            d.kind = Decision::Kind::NotTileable;
            d.refutation_radius = st.round;
            d.stats = stats;
            return d;
        }
    }
}

std::string serialize_session(const SessionState& s) {
    nlohmann::json j;
    j["version"] = s.version;
    j["tile_hash"] = s.tile_hash;
    j["round"] = s.round;
    j["lattice_cursor"] = s.lattice_cursor;
    j["patch_pending"] = s.patch_pending;
    j["stats"] = {{"lattices_tried", s.stats.lattices_tried},
                  {"patches_tried", s.stats.patches_tried},
                  {"work_units", s.stats.work_units}};
    return j.dump(2) + "\n";
}

SessionState parse_session(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("invalid session state: ") + e.what());
    }
    SessionState s;
    try {
        s.version = j.at("version").get<int>();
        if (s.version != 1) throw SyntaxError("unknown session state version");
        s.tile_hash = j.at("tile_hash").get<uint64_t>();
        s.round = j.at("round").get<long long>();
        s.lattice_cursor = j.at("lattice_cursor").get<long long>();
        s.patch_pending = j.at("patch_pending").get<bool>();
        s.stats.lattices_tried = j.at("stats").at("lattices_tried").get<long long>();
        s.stats.patches_tried = j.at("stats").at("patches_tried").get<long long>();
        s.stats.work_units = j.at("stats").at("work_units").get<long long>();
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("invalid session state: ") + e.what());
    }
    return s;
}

} // namespace polytile
