#include "snortcgt/position.hpp"

#include "snortcgt/engine.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace snort {

const char* tint_name(Tint t) {
    switch (t) {
        case Tint::None: return "none";
        case Tint::Blue: return "blue";
        case Tint::Red: return "red";
    }
    return "?";
}

Position::Position(std::vector<std::pair<std::string, Tint>> vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
    if (vertices.size() > kMaxVertices) {
        throw std::invalid_argument("position exceeds " + std::to_string(kMaxVertices) + " vertices");
    }
    std::unordered_map<std::string, int> index;
    for (auto& [label, tint] : vertices) {
        if (index.count(label)) throw std::invalid_argument("duplicate vertex label: " + label);
        index[label] = size();
        labels_.push_back(std::move(label));
        tints_.push_back(tint);
        adj_.push_back(0);
    }
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw std::invalid_argument("edge references unknown vertex: " + a);
        if (ib == index.end()) throw std::invalid_argument("edge references unknown vertex: " + b);
        if (ia->second == ib->second) throw std::invalid_argument("loop edge at vertex: " + a);
        add_edge(ia->second, ib->second);
    }
}

int Position::vertex_degree(int v) const {
    return std::popcount(adj_[v]);
}

int Position::add_vertex(std::string label, Tint t) {
    if (size() >= kMaxVertices) throw std::invalid_argument("too many vertices");
    labels_.push_back(std::move(label));
    tints_.push_back(t);
    adj_.push_back(0);
    return size() - 1;
}

void Position::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    adj_[u] |= 1ULL << v;
    adj_[v] |= 1ULL << u;
}

void Position::remove_edge(int u, int v) {
    adj_[u] &= ~(1ULL << v);
    adj_[v] &= ~(1ULL << u);
}

void Position::toggle_edge(int u, int v) {
    if (has_edge(u, v)) remove_edge(u, v);
    else add_edge(u, v);
}

void Position::remove_vertex(int v) {
    const int n = size();
    std::vector<std::uint64_t> adj(n - 1, 0);
    auto newIdx = [v](int i) { return i < v ? i : i - 1; };
    for (int i = 0; i < n; ++i) {
        if (i == v) continue;
        std::uint64_t row = adj_[i];
        std::uint64_t out = 0;
        for (int j = 0; j < n; ++j) {
            if (j == v || !((row >> j) & 1)) continue;
            out |= 1ULL << newIdx(j);
        }
        adj[newIdx(i)] = out;
    }
    labels_.erase(labels_.begin() + v);
    tints_.erase(tints_.begin() + v);
    adj_ = std::move(adj);
}

int Position::find_label(const std::string& label) const {
    for (int i = 0; i < size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return -1;
}

std::vector<std::pair<int, int>> Position::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u) {
        std::uint64_t row = adj_[u] >> (u + 1) << (u + 1);  // j > u only
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

int Position::edge_count() const {
    int total = 0;
    for (int v = 0; v < size(); ++v) total += vertex_degree(v);
    return total / 2;
}

std::vector<int> legal_moves(const Position& p, Player who) {
    const Tint own = tint_of(who);
    std::vector<int> out;
    for (int v = 0; v < p.size(); ++v) {
        if (p.tint(v) == Tint::None || p.tint(v) == own) out.push_back(v);
    }
    return out;
}

Position normalize(const Position& p) {
    Position q = p;
    for (auto [u, v] : q.edge_list()) {
        if (q.tint(u) != Tint::None && q.tint(u) == q.tint(v)) q.remove_edge(u, v);
    }
    return q;
}

Position play(const Position& p, Player who, int v) {
    if (v < 0 || v >= p.size()) throw IllegalMove("vertex index out of range");
    const Tint own = tint_of(who);
    if (p.tint(v) != Tint::None && p.tint(v) != own) {
        throw IllegalMove("vertex is reserved by the opponent");
    }
    std::vector<bool> drop(p.size(), false);
    drop[v] = true;
    std::vector<Tint> tint(p.size());
    for (int u = 0; u < p.size(); ++u) tint[u] = p.tint(u);
    std::uint64_t nbrs = p.neighbours(v);
    while (nbrs) {
        int u = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (tint[u] == Tint::None) tint[u] = own;
        else if (tint[u] != own) drop[u] = true;  // tinted both colours: dead
    }
    Position q;
    std::vector<int> map(p.size(), -1);
    for (int u = 0; u < p.size(); ++u) {
        if (drop[u]) continue;
        map[u] = q.add_vertex(p.label(u), tint[u]);
    }
    for (auto [a, b] : p.edge_list()) {
        if (map[a] >= 0 && map[b] >= 0) q.add_edge(map[a], map[b]);
    }
    return normalize(q);
}

std::vector<Position> components(const Position& p) {
    std::vector<Position> out;
    std::vector<bool> seen(p.size(), false);
    for (int start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> stack{start};
        std::vector<int> verts;
        seen[start] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            std::uint64_t row = p.neighbours(u);
            while (row) {
                int w = std::countr_zero(row);
                row &= row - 1;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        Position comp;
        std::vector<int> map(p.size(), -1);
        for (int u : verts) map[u] = comp.add_vertex(p.label(u), p.tint(u));
        for (int u : verts) {
            std::uint64_t row = p.neighbours(u);
            while (row) {
                int w = std::countr_zero(row);
                row &= row - 1;
                if (u < w) comp.add_edge(map[u], map[w]);
            }
        }
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const Position& a, const Position& b) {
        return canonical_key(a) < canonical_key(b);
    });
    return out;
}

Position swap_colours(const Position& p) {
    Position q = p;
    for (int v = 0; v < q.size(); ++v) {
        if (q.tint(v) == Tint::Blue) q.set_tint(v, Tint::Red);
        else if (q.tint(v) == Tint::Red) q.set_tint(v, Tint::Blue);
    }
    return q;
}

int degree(const Position& p) {
    int best = 0;
    for (int v = 0; v < p.size(); ++v) best = std::max(best, p.vertex_degree(v));
    return best;
}

int second_degree(const Position& p) {
    int best = 0;
    for (int v = 0; v < p.size(); ++v) {
        std::uint64_t at2 = 0;
        std::uint64_t row = p.neighbours(v);
        while (row) {
            int u = std::countr_zero(row);
            row &= row - 1;
            at2 |= p.neighbours(u);
        }
        at2 &= ~p.neighbours(v);
        at2 &= ~(1ULL << v);
        best = std::max(best, std::popcount(at2));
    }
    return best;
}

}  // namespace snort
