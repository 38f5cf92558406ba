#pragma once

#include "snortcgt/dyadic.hpp"
#include "snortcgt/game.hpp"
#include "snortcgt/position.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace snort {

// Canonical byte string for a tinted graph, invariant under tint-preserving
// isomorphism: colour refinement plus individualization backtracking with
// orbit pruning from discovered automorphisms. Expects a normalized position
// (value() always hands it one); labels are ignored.
std::string canonical_key(const Position& p);

// Canonical game value of a position: normalize, split into components,
// recurse over both players' moves, sum the components, canonicalize.
// Memoized on canonical_key, so isomorphic positions share entries.
cgt::Game value(const Position& p);

cgt::Dyadic position_temperature(const Position& p);

// Caps the position-value memo (entries evicted least-recently-used);
// std::nullopt removes the cap. Wired to SNORT_MEMO_LIMIT by the CLI.
void set_value_memo_limit(std::optional<std::size_t> limit);
std::size_t value_memo_size();

}  // namespace snort
