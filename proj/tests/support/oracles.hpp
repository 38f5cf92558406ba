#pragma once

// Test-only oracles, deliberately independent of the implementation paths
// they check: order via outcomes of difference games, Snort outcomes via a
// raw-rules minimax with no value theory, and isomorphism via brute force.

#include "snortcgt/game.hpp"
#include "snortcgt/position.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace oracles {

// g <= h iff Left moving second wins h - g.
inline bool leq_by_outcome(cgt::Game g, cgt::Game h) {
    cgt::Outcome o = cgt::outcome(cgt::sum(h, cgt::negate(g)));
    return o == cgt::Outcome::LeftWins || o == cgt::Outcome::SecondWins;
}

inline bool eq_by_outcome(cgt::Game g, cgt::Game h) {
    return cgt::outcome(cgt::sum(g, cgt::negate(h))) == cgt::Outcome::SecondWins;
}

// Straight minimax over the raw Snort rules: colour an uncoloured vertex not
// adjacent to an opponent-coloured one; a player with no move loses. No
// tinting, no decomposition, no game values.
class SnortMinimax {
public:
    explicit SnortMinimax(const snort::Position& p) : n_(p.size()) {
        adj_.reserve(n_);
        colour_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) {
            adj_.push_back(p.neighbours(v));
            if (p.tint(v) == snort::Tint::Blue) colour_[v] = 1;
            if (p.tint(v) == snort::Tint::Red) colour_[v] = 2;
        }
        // Tinted vertices behave as "reserved": treat them as adjacent to a
        // phantom vertex of that colour. For untinted boards (the only ones
        // the acceptance oracle uses) this changes nothing.
    }

    cgt::Outcome outcome() {
        bool lf = wins(1);
        bool rf = wins(2);
        if (lf && rf) return cgt::Outcome::FirstWins;
        if (lf) return cgt::Outcome::LeftWins;
        if (rf) return cgt::Outcome::RightWins;
        return cgt::Outcome::SecondWins;
    }

private:
    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> colour_;  // 0 none, 1 blue, 2 red; tints mark reservations

    bool legal(int v, int player) const {
        if (played_[v]) return false;
        if (colour_[v] != 0 && colour_[v] != player) return false;
        std::uint64_t row = adj_[v];
        while (row) {
            int u = std::countr_zero(row);
            row &= row - 1;
            if (played_[u] && stone_[u] != player) return false;
        }
        return true;
    }

    bool wins(int player) {
        for (int v = 0; v < n_; ++v) {
            if (!legal(v, player)) continue;
            played_[v] = true;
            stone_[v] = player;
            bool opponent_wins = wins(3 - player);
            played_[v] = false;
            if (!opponent_wins) return true;
        }
        return false;
    }

    std::vector<bool> played_ = std::vector<bool>(64, false);
    std::vector<int> stone_ = std::vector<int>(64, 0);
};

inline cgt::Outcome snort_minimax_outcome(const snort::Position& p) {
    return SnortMinimax(p).outcome();
}

// Tint-preserving isomorphism by exhausting permutations; fine for n <= 8.
inline bool brute_force_isomorphic(const snort::Position& a, const snort::Position& b) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (a.tint(v) != b.tint(perm[v])) ok = false;
        }
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool is_connected(const snort::Position& p) {
    if (p.size() == 0) return false;
    std::uint64_t seen = 1;
    for (;;) {
        std::uint64_t grown = seen;
        std::uint64_t frontier = seen;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            grown |= p.neighbours(v);
        }
        if (grown == seen) break;
        seen = grown;
    }
    return std::popcount(seen) == p.size();
}

// All connected untinted graphs on exactly n vertices, one per isomorphism
// class, deduplicated by brute force.
inline std::vector<snort::Position> connected_graphs_up_to_iso(int n) {
    std::vector<snort::Position> reps;
    if (n == 0) return reps;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    const int m = static_cast<int>(slots.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        snort::Position p;
        for (int v = 0; v < n; ++v) p.add_vertex("v" + std::to_string(v));
        for (int s = 0; s < m; ++s) {
            if ((mask >> s) & 1) p.add_edge(slots[s].first, slots[s].second);
        }
        if (!is_connected(p)) continue;
        bool fresh = true;
        for (const auto& rep : reps) {
            if (brute_force_isomorphic(p, rep)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(std::move(p));
    }
    return reps;
}

}  // namespace oracles
