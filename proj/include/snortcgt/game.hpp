#pragma once

#include "snortcgt/dyadic.hpp"

#include <cstdint>
#include <vector>

namespace cgt {

// Handle to an interned game {L | R}. Structurally identical games share one
// id, so structural equality is id equality. Games are immutable once
// interned; the shared tables behind the free functions below are guarded by
// a mutex, so all operations may be called from multiple threads.
class Game {
public:
    Game() = default;  // the zero game { | }
    std::uint32_t id() const { return id_; }
    friend bool operator==(Game a, Game b) { return a.id_ == b.id_; }
    friend bool operator!=(Game a, Game b) { return a.id_ != b.id_; }
    friend bool operator<(Game a, Game b) { return a.id_ < b.id_; }

    static Game from_id(std::uint32_t id) { return Game(id); }

private:
    explicit Game(std::uint32_t id) : id_(id) {}
    std::uint32_t id_ = 0;
};

enum class Outcome { LeftWins, RightWins, FirstWins, SecondWins };

const char* outcome_name(Outcome o);

// Classification of a canonical form, used for printing and option ordering.
struct GameKind {
    enum Tag { Integer, IntegerPlusStar, Number, NumberPlusStar, General };
    Tag tag = General;
    Dyadic value;  // meaningless when General
};

// Interns the game with exactly these options (deduplicated, order-free).
Game make_game(std::vector<Game> left, std::vector<Game> right);

Game integer(long long n);
Game number(const Dyadic& x);  // canonical form of a (dyadic) number
Game star();                   // {0 | 0}

std::vector<Game> left_options(Game g);
std::vector<Game> right_options(Game g);

Game negate(Game g);
Game sum(Game g, Game h);

// g <= h in the partial order of games; memoized on interned identities.
bool leq(Game g, Game h);
bool eq(Game g, Game h);

// Who wins under optimal play, via the two move-first win predicates.
Outcome outcome(Game g);

// Unique canonical form: dominated options removed, reversible options
// bypassed, iterated to a fixpoint.
Game canonicalize(Game g);

// Recognizes integers, numbers and number-plus-star shapes. Expects a
// canonical game; anything unrecognized is General.
GameKind kind(Game g);

}  // namespace cgt
