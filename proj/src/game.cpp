#include "snortcgt/game.hpp"

#include "flat_map.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace cgt {

namespace {

using Id = std::uint32_t;

struct Node {
    std::vector<Id> left;   // sorted, unique
    std::vector<Id> right;  // sorted, unique
};

struct VecHash {
    std::size_t operator()(const std::vector<Id>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (Id x : v) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

void sort_unique(std::vector<Id>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// All game state lives here. Interning makes structural equality identity
// equality, which every memo table below relies on.
class Universe {
public:
    static Universe& get() {
        static Universe u;
        return u;
    }

    std::mutex mutex;

    Universe() {
        Id zero = intern({}, {});
        (void)zero;
        assert(zero == 0);
    }

    const Node& node(Id id) const { return nodes_[id]; }

    Id intern(std::vector<Id> l, std::vector<Id> r) {
        sort_unique(l);
        sort_unique(r);
        std::vector<Id> key;
        key.reserve(l.size() + r.size() + 1);
        key.push_back(static_cast<Id>(l.size()));
        key.insert(key.end(), l.begin(), l.end());
        key.insert(key.end(), r.begin(), r.end());
        auto it = intern_.find(key);
        if (it != intern_.end()) return it->second;
        Id id = static_cast<Id>(nodes_.size());
        nodes_.push_back(Node{std::move(l), std::move(r)});
        intern_.emplace(std::move(key), id);
        return id;
    }

    Id integer_game(long long n) {
        Id g = 0;
        if (n >= 0) {
            for (long long i = 0; i < n; ++i) g = intern({g}, {});
        } else {
            for (long long i = 0; i > n; --i) g = intern({}, {g});
        }
        return g;
    }

    Id number_game(const Dyadic& x) {
        if (x.is_integer()) {
            return integer_game(x.numerator().convert_to<long long>());
        }
        Dyadic ulp = Dyadic::fraction(1, x.exponent());
        Id l = number_game(x - ulp);
        Id r = number_game(x + ulp);
        return intern({l}, {r});
    }

    Id negate_game(Id g) {
        if (const Id* hit = negate_memo_.find(g)) return *hit;
        std::vector<Id> l, r;
        for (Id x : node(g).right) l.push_back(negate_game(x));
        for (Id x : node(g).left) r.push_back(negate_game(x));
        Id res = intern(std::move(l), std::move(r));
        negate_memo_.insert(g, res);
        negate_memo_.insert(res, g);
        return res;
    }

    Id sum_game(Id a, Id b) {
        if (a == 0) return b;
        if (b == 0) return a;
        std::uint64_t key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
        if (const Id* hit = sum_memo_.find(key)) return *hit;
        std::vector<Id> l, r;
        const Node& na = node(a);
        const Node& nb = node(b);
        for (Id x : na.left) l.push_back(sum_game(x, b));
        for (Id x : nb.left) l.push_back(sum_game(a, x));
        for (Id x : na.right) r.push_back(sum_game(x, b));
        for (Id x : nb.right) r.push_back(sum_game(a, x));
        Id res = intern(std::move(l), std::move(r));
        sum_memo_.insert(key, res);
        return res;
    }

    bool leq_game(Id g, Id h) {
        if (g == h) return true;
        std::uint64_t key = (static_cast<std::uint64_t>(g) << 32) | h;
        if (const std::uint8_t* hit = leq_memo_.find(key)) return *hit != 0;
        bool res = true;
        for (Id gl : node(g).left) {
            if (leq_game(h, gl)) {
                res = false;
                break;
            }
        }
        if (res) {
            for (Id hr : node(h).right) {
                if (leq_game(hr, g)) {
                    res = false;
                    break;
                }
            }
        }
        leq_memo_.insert(key, res ? 1 : 0);
        return res;
    }

    bool wins_moving_first(Id g, bool left_player) {
        auto& memo = left_player ? left_first_memo_ : right_first_memo_;
        if (const std::uint8_t* hit = memo.find(g)) return *hit != 0;
        bool res = false;
        const std::vector<Id>& opts = left_player ? node(g).left : node(g).right;
        for (Id o : opts) {
            if (!wins_moving_first(o, !left_player)) {
                res = true;
                break;
            }
        }
        memo.insert(g, res ? 1 : 0);
        return res;
    }

    // Deletes options dominated by a sibling. For Left options, A is dropped
    // when some sibling B has A <= B; mirrored for Right. The index tie-break
    // keeps exactly one survivor if two options happen to be equal.
    std::vector<Id> remove_dominated(const std::vector<Id>& opts, bool left_side) {
        std::vector<Id> kept;
        for (std::size_t i = 0; i < opts.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < opts.size() && !dominated; ++j) {
                if (j == i) continue;
                bool le = left_side ? leq_game(opts[i], opts[j]) : leq_game(opts[j], opts[i]);
                if (!le) continue;
                bool ge = left_side ? leq_game(opts[j], opts[i]) : leq_game(opts[i], opts[j]);
                if (!ge || j < i) dominated = true;
            }
            if (!dominated) kept.push_back(opts[i]);
        }
        return kept;
    }

    Id canonical_game(Id g) {
        if (const Id* hit = canon_memo_.find(g)) return *hit;
        std::vector<Id> l, r;
        for (Id x : node(g).left) l.push_back(canonical_game(x));
        for (Id x : node(g).right) r.push_back(canonical_game(x));
        sort_unique(l);
        sort_unique(r);
        for (;;) {
            const Id h = intern(l, r);  // equal to g at every pass
            std::vector<Id> l1 = remove_dominated(l, true);
            std::vector<Id> r1 = remove_dominated(r, false);
            bool changed = l1 != l || r1 != r;
            std::vector<Id> l2, r2;
            for (Id opt : l1) {
                bool reversed = false;
                for (Id lr : node(opt).right) {
                    if (leq_game(lr, h)) {  // Right can answer through lr
                        const auto& repl = node(lr).left;
                        l2.insert(l2.end(), repl.begin(), repl.end());
                        reversed = true;
                        changed = true;
                        break;
                    }
                }
                if (!reversed) l2.push_back(opt);
            }
            for (Id opt : r1) {
                bool reversed = false;
                for (Id rl : node(opt).left) {
                    if (leq_game(h, rl)) {
                        const auto& repl = node(rl).right;
                        r2.insert(r2.end(), repl.begin(), repl.end());
                        reversed = true;
                        changed = true;
                        break;
                    }
                }
                if (!reversed) r2.push_back(opt);
            }
            if (!changed) {
                canon_memo_.insert(g, h);
                canon_memo_.insert(h, h);
                return h;
            }
            sort_unique(l2);
            sort_unique(r2);
            l = std::move(l2);
            r = std::move(r2);
        }
    }

    // Exact value of a canonical game that is a number, if it is one.
    std::optional<Dyadic> as_number(Id g) {
        auto it = number_memo_.find(g);
        if (it != number_memo_.end()) return it->second;
        std::optional<Dyadic> res;
        const Node& nd = node(g);
        if (nd.left.empty() && nd.right.empty()) {
            res = Dyadic(0);
        } else if (nd.right.empty() && nd.left.size() == 1) {
            auto v = as_number(nd.left[0]);
            if (v && v->is_integer()) {
                Dyadic cand = *v + Dyadic(1);
                if (number_game(cand) == g) res = cand;
            }
        } else if (nd.left.empty() && nd.right.size() == 1) {
            auto v = as_number(nd.right[0]);
            if (v && v->is_integer()) {
                Dyadic cand = *v - Dyadic(1);
                if (number_game(cand) == g) res = cand;
            }
        } else if (nd.left.size() == 1 && nd.right.size() == 1) {
            auto a = as_number(nd.left[0]);
            auto b = as_number(nd.right[0]);
            if (a && b && *a < *b) {
                Dyadic cand = simplest_between(*a, *b);
                if (number_game(cand) == g) res = cand;
            }
        }
        number_memo_[g] = res;
        return res;
    }

    GameKind kind_of(Id g) {
        if (auto v = as_number(g)) {
            return GameKind{v->is_integer() ? GameKind::Integer : GameKind::Number, *v};
        }
        const Node& nd = node(g);
        if (nd.left.size() == 1 && nd.right.size() == 1 && nd.left[0] == nd.right[0]) {
            if (auto v = as_number(nd.left[0])) {
                return GameKind{v->is_integer() ? GameKind::IntegerPlusStar : GameKind::NumberPlusStar, *v};
            }
        }
        return GameKind{GameKind::General, Dyadic(0)};
    }

private:
    std::deque<Node> nodes_;  // deque: references stay valid while interning
    std::unordered_map<std::vector<Id>, Id, VecHash> intern_;
    detail::FlatMap64<Id> negate_memo_;
    detail::FlatMap64<Id> canon_memo_;
    detail::FlatMap64<Id> sum_memo_;
    detail::FlatMap64<std::uint8_t> leq_memo_;
    detail::FlatMap64<std::uint8_t> left_first_memo_;
    detail::FlatMap64<std::uint8_t> right_first_memo_;
    std::unordered_map<Id, std::optional<Dyadic>> number_memo_;
};

}  // namespace

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::LeftWins: return "LeftWins";
        case Outcome::RightWins: return "RightWins";
        case Outcome::FirstWins: return "FirstWins";
        case Outcome::SecondWins: return "SecondWins";
    }
    return "?";
}

Game make_game(std::vector<Game> left, std::vector<Game> right) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    std::vector<Id> l, r;
    l.reserve(left.size());
    r.reserve(right.size());
    for (Game g : left) l.push_back(g.id());
    for (Game g : right) r.push_back(g.id());
    return Game::from_id(u.intern(std::move(l), std::move(r)));
}

Game integer(long long n) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    return Game::from_id(u.integer_game(n));
}

Game number(const Dyadic& x) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    return Game::from_id(u.number_game(x));
}

Game star() {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    Id zero = 0;
    return Game::from_id(u.intern({zero}, {zero}));
}

std::vector<Game> left_options(Game g) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    std::vector<Game> out;
    for (Id x : u.node(g.id()).left) out.push_back(Game::from_id(x));
    return out;
}

std::vector<Game> right_options(Game g) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    std::vector<Game> out;
    for (Id x : u.node(g.id()).right) out.push_back(Game::from_id(x));
    return out;
}

Game negate(Game g) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    return Game::from_id(u.negate_game(g.id()));
}

Game sum(Game g, Game h) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    return Game::from_id(u.sum_game(g.id(), h.id()));
}

bool leq(Game g, Game h) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    return u.leq_game(g.id(), h.id());
}

bool eq(Game g, Game h) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    return u.leq_game(g.id(), h.id()) && u.leq_game(h.id(), g.id());
}

Outcome outcome(Game g) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    bool lf = u.wins_moving_first(g.id(), true);
    bool rf = u.wins_moving_first(g.id(), false);
    if (lf && rf) return Outcome::FirstWins;
    if (lf) return Outcome::LeftWins;
    if (rf) return Outcome::RightWins;
    return Outcome::SecondWins;
}

Game canonicalize(Game g) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    return Game::from_id(u.canonical_game(g.id()));
}

GameKind kind(Game g) {
    Universe& u = Universe::get();
    std::lock_guard<std::mutex> lock(u.mutex);
    return u.kind_of(g.id());
}

}  // namespace cgt
