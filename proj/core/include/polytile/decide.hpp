#pragma once

#include "polytile/patch.hpp"
#include "polytile/torus_cover.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace polytile {

struct DecideStats {
    long long lattices_tried = 0; // torus attempts (divisibility skips are free)
    long long patches_tried = 0;
    long long work_units = 0;     // one per torus attempt or patch call
};

// Serializable engine position: the enumeration is deterministic, so the
// round, the stream cursor and the pending-patch flag pin the exact state.
struct SessionState {
    int version = 1;
    uint64_t tile_hash = 0;
    long long round = 1;
    long long lattice_cursor = 0; // lattices consumed from the global stream
    bool patch_pending = false;   // round's lattices done, patch not yet run
    DecideStats stats;
};

struct Decision {
    enum class Kind { Tileable, NotTileable, Undecided } kind = Kind::Undecided;
    std::optional<TorusTiling> certificate; // Tileable
    long long refutation_radius = 0;        // NotTileable
    std::optional<SessionState> state;      // Undecided
    DecideStats stats;
};

// Alternates periodic search and refutation search in rounds B = 1, 2, ...:
// round B tries every lattice of index <= B * |tile| and then patch radius B.
// With no budget this terminates on every input that is decidable by those
// two certificates; with a budget it suspends deterministically.
Decision decide(const DiscreteTile& tile,
                std::optional<long long> budget = std::nullopt,
                const std::optional<SessionState>& resume = std::nullopt,
                int threads = 1);

uint64_t tile_hash(const DiscreteTile& tile);

std::string serialize_session(const SessionState& s);
SessionState parse_session(const std::string& text);

} // namespace polytile
