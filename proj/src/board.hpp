#pragma once

// Internal compact board used by the value recursion: fixed-size arrays, no
// strings, no heap. Labels exist only on the public Position type.

#include "snortcgt/position.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace snort::detail {

struct Board {
    int n = 0;
    std::array<std::uint64_t, Position::kMaxVertices> adj;
    std::array<std::uint8_t, Position::kMaxVertices> tint;
};

inline Board to_board(const Position& p) {
    Board b;
    b.n = p.size();
    for (int v = 0; v < b.n; ++v) {
        b.adj[v] = p.neighbours(v);
        b.tint[v] = static_cast<std::uint8_t>(p.tint(v));
    }
    return b;
}

// Canonical labeling over raw arrays; canonical_key(Position) wraps this.
std::string canonical_key_raw(int n, const std::uint64_t* adj, const std::uint8_t* tint);

}  // namespace snort::detail
