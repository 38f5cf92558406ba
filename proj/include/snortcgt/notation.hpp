#pragma once

#include "snortcgt/game.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgt {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position;  // byte offset into the input
};

// Text form of a canonical game: integers, reduced dyadic fractions, "*",
// "n*" for n + *, "{a, b|c, d}", and "±{a, b}" / "±x" when the right options
// are exactly the negated left options. Options print in a deterministic
// total order, so equal games always format identically.
std::string format_game(Game g);

// Inverse of format_game; whitespace-insensitive, accepts "±" or "+-".
// parse_game(format_game(g)) is structurally g for canonical g.
Game parse_game(std::string_view text);

}  // namespace cgt
