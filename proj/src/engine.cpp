#include "snortcgt/engine.hpp"

#include "snortcgt/thermograph.hpp"

#include "board.hpp"

#include <bit>
#include <list>
#include <mutex>
#include <unordered_map>

namespace snort {

namespace {

using detail::Board;

// Position-value memo keyed on canonical keys, with optional LRU eviction.
class ValueMemo {
public:
    std::optional<cgt::Game> get(const std::string& key) {
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        order_.splice(order_.begin(), order_, it->second.second);
        return it->second.first;
    }

    void put(const std::string& key, cgt::Game g) {
        auto it = map_.find(key);
        if (it != map_.end()) {
            order_.splice(order_.begin(), order_, it->second.second);
            it->second.first = g;
            return;
        }
        order_.push_front(key);
        map_.emplace(key, std::make_pair(g, order_.begin()));
        evict();
    }

    void set_limit(std::optional<std::size_t> limit) {
        limit_ = limit;
        evict();
    }

    std::size_t size() const { return map_.size(); }

private:
    void evict() {
        if (!limit_) return;
        while (map_.size() > *limit_ && !order_.empty()) {
            map_.erase(order_.back());
            order_.pop_back();
        }
    }

    std::unordered_map<std::string, std::pair<cgt::Game, std::list<std::string>::iterator>> map_;
    std::list<std::string> order_;  // front = most recently used
    std::optional<std::size_t> limit_;
};

ValueMemo g_memo;
ValueMemo g_labelled_memo;  // exact-bytes transposition cache in front of the
                            // isomorphism key; different move orders reach
                            // identical labelled boards constantly
std::mutex g_mutex;

constexpr std::uint8_t kNone = 0, kBlue = 1, kRed = 2;

// Exact encoding of the board as indexed: collisions are impossible and
// equal keys mean identity-isomorphic boards. Writes into `out` so the
// lookup path reuses one buffer instead of allocating per child.
void labelled_key(const Board& b, std::string& out) {
    const int row_bytes = (b.n + 7) / 8;
    out.clear();
    out.push_back(static_cast<char>(b.n));
    for (int v = 0; v < b.n; ++v) out.push_back(static_cast<char>(b.tint[v]));
    for (int v = 0; v < b.n; ++v) {
        std::uint64_t row = b.adj[v];
        for (int k = 0; k < row_bytes; ++k) out.push_back(static_cast<char>((row >> (8 * k)) & 0xff));
    }
}

// Drops edges joining two vertices of the same tint colour.
void normalize_board(Board& b) {
    std::uint64_t blue = 0, red = 0;
    for (int v = 0; v < b.n; ++v) {
        if (b.tint[v] == kBlue) blue |= 1ULL << v;
        if (b.tint[v] == kRed) red |= 1ULL << v;
    }
    for (int v = 0; v < b.n; ++v) {
        if (b.tint[v] == kBlue) b.adj[v] &= ~blue;
        if (b.tint[v] == kRed) b.adj[v] &= ~red;
    }
}

// Plays own-coloured vertex v: remove it, tint neighbours, drop neighbours
// tinted in both colours, normalize. Vertex order is preserved.
Board play_board(const Board& b, std::uint8_t own, int v) {
    std::uint64_t drop = 1ULL << v;
    std::uint64_t nbrs = b.adj[v];
    const std::uint8_t other = own == kBlue ? kRed : kBlue;
    Board out;
    std::uint64_t row = nbrs;
    while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        if (b.tint[u] == other) drop |= 1ULL << u;
    }
    int map[Position::kMaxVertices];
    out.n = 0;
    for (int u = 0; u < b.n; ++u) {
        if ((drop >> u) & 1) {
            map[u] = -1;
            continue;
        }
        map[u] = out.n;
        out.tint[out.n] = ((nbrs >> u) & 1) ? own : b.tint[u];
        ++out.n;
    }
    for (int u = 0; u < b.n; ++u) {
        if (map[u] < 0) continue;
        std::uint64_t r = b.adj[u] & ~drop;
        std::uint64_t packed = 0;
        while (r) {
            int w = std::countr_zero(r);
            r &= r - 1;
            packed |= 1ULL << map[w];
        }
        out.adj[map[u]] = packed;
    }
    normalize_board(out);
    return out;
}

Board extract(const Board& b, std::uint64_t mask) {
    Board out;
    int map[Position::kMaxVertices];
    out.n = 0;
    for (int u = 0; u < b.n; ++u) {
        if (!((mask >> u) & 1)) {
            map[u] = -1;
            continue;
        }
        map[u] = out.n;
        out.tint[out.n] = b.tint[u];
        ++out.n;
    }
    for (int u = 0; u < b.n; ++u) {
        if (map[u] < 0) continue;
        std::uint64_t r = b.adj[u] & mask;
        std::uint64_t packed = 0;
        while (r) {
            int w = std::countr_zero(r);
            r &= r - 1;
            packed |= 1ULL << map[w];
        }
        out.adj[map[u]] = packed;
    }
    return out;
}

cgt::Game component_value(const Board& comp);

// comp must be normalized. Splits into connected components and sums.
cgt::Game board_value(const Board& b) {
    cgt::Game total;  // zero
    std::uint64_t rest = b.n == 64 ? ~0ULL : (1ULL << b.n) - 1;
    while (rest) {
        int start = std::countr_zero(rest);
        std::uint64_t comp = 1ULL << start;
        for (;;) {
            std::uint64_t grown = comp;
            std::uint64_t frontier = comp;
            while (frontier) {
                int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                grown |= b.adj[u];
            }
            if (grown == comp) break;
            comp = grown;
        }
        rest &= ~comp;
        total = cgt::sum(total, component_value(extract(b, comp)));
    }
    return cgt::canonicalize(total);
}

// Scratch for the lookup fast path; the lookup finishes before any
// recursion, and misses copy the key out. Evaluation holds g_mutex.
std::string g_key_scratch;

cgt::Game component_value(const Board& comp) {
    labelled_key(comp, g_key_scratch);
    if (auto hit = g_labelled_memo.get(g_key_scratch)) return *hit;
    std::string fast = g_key_scratch;
    std::string key = detail::canonical_key_raw(comp.n, comp.adj.data(), comp.tint.data());
    if (auto hit = g_memo.get(key)) {
        g_labelled_memo.put(fast, *hit);
        return *hit;
    }
    std::vector<cgt::Game> left, right;
    for (int v = 0; v < comp.n; ++v) {
        if (comp.tint[v] != kRed) left.push_back(board_value(play_board(comp, kBlue, v)));
        if (comp.tint[v] != kBlue) right.push_back(board_value(play_board(comp, kRed, v)));
    }
    cgt::Game g = cgt::canonicalize(cgt::make_game(std::move(left), std::move(right)));
    g_memo.put(key, g);
    g_labelled_memo.put(fast, g);
    return g;
}

}  // namespace

cgt::Game value(const Position& p) {
    std::lock_guard<std::mutex> lock(g_mutex);
    Board b = detail::to_board(p);
    normalize_board(b);
    return board_value(b);
}

cgt::Dyadic position_temperature(const Position& p) {
    return cgt::temperature(value(p));
}

void set_value_memo_limit(std::optional<std::size_t> limit) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_memo.set_limit(limit);
    g_labelled_memo.set_limit(limit);
}

std::size_t value_memo_size() {
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_memo.size();
}

}  // namespace snort
