#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snort {

enum class Tint : std::uint8_t { None, Blue, Red };

enum class Player : std::uint8_t { Left, Right };

inline Tint tint_of(Player p) { return p == Player::Left ? Tint::Blue : Tint::Red; }
inline Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }

const char* tint_name(Tint t);

class IllegalMove : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A Snort board: a simple graph whose vertices carry a tint in
// {None, Blue, Red}. Vertices are addressed by index; the labels are opaque
// and survive play/normalize for traceability only.
class Position {
public:
    static constexpr int kMaxVertices = 64;

    Position() = default;
    Position(std::vector<std::pair<std::string, Tint>> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges);

    int size() const { return static_cast<int>(tints_.size()); }
    const std::string& label(int v) const { return labels_[v]; }
    Tint tint(int v) const { return tints_[v]; }
    void set_tint(int v, Tint t) { tints_[v] = t; }
    std::uint64_t neighbours(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    int vertex_degree(int v) const;

    int add_vertex(std::string label, Tint t = Tint::None);
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return adjacent(u, v); }
    void toggle_edge(int u, int v);
    void remove_vertex(int v);

    int find_label(const std::string& label) const;  // -1 if absent

    // Edges as index pairs (u < v), sorted.
    std::vector<std::pair<int, int>> edge_list() const;
    int edge_count() const;

private:
    std::vector<std::string> labels_;
    std::vector<Tint> tints_;
    std::vector<std::uint64_t> adj_;
};

// Vertices the player may still colour: untinted ones and those tinted in
// the player's own colour.
std::vector<int> legal_moves(const Position& p, Player who);

// Removes the played vertex, tints its neighbours (a neighbour tinted in the
// opposite colour dies), then normalizes. Throws IllegalMove on a reserved
// vertex or bad index.
Position play(const Position& p, Player who, int v);

// Drops edges joining two vertices of the same (non-None) tint. Idempotent.
Position normalize(const Position& p);

// Connected components of a normalized position, sorted by canonical key.
std::vector<Position> components(const Position& p);

Position swap_colours(const Position& p);

int degree(const Position& p);         // max vertex degree; 0 on empty
int second_degree(const Position& p);  // max #vertices at distance exactly 2

}  // namespace snort
