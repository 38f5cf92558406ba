#include "snortcgt/engine.hpp"

#include "board.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace snort {

namespace {

// Individualization-refinement canonical labeling for tinted graphs.
// The key is the lexicographically least leaf encoding over the (pruned)
// search tree; automorphisms discovered when two leaves encode identically
// prune sibling branches whose roots lie in one orbit of the stabilizer of
// the current individualization prefix.
class KeySearch {
public:
    KeySearch(int n, const std::uint64_t* adj, const std::uint8_t* tint)
        : n_(n), adj_(adj), tint_(tint) {}

    std::string run() {
        if (n_ == 0) return std::string(1, '\0');
        std::vector<int> colour(n_);
        for (int v = 0; v < n_; ++v) colour[v] = tint_[v];
        search(std::move(colour));
        return best_;
    }

private:
    int n_;
    const std::uint64_t* adj_;
    const std::uint8_t* tint_;

    std::string best_;
    std::string first_;
    std::vector<int> first_lab_;
    std::vector<std::vector<int>> gens_;
    std::vector<int> prefix_;

    // Scratch buffers reused across refinement rounds and search nodes.
    std::vector<int> pool_;
    std::vector<int> offset_;
    std::vector<int> length_;
    std::vector<int> order_;

    // 1-WL colour refinement. New colours are ranks of (old colour, sorted
    // neighbour colours) signatures, so the refined ordered partition is
    // isomorphism-invariant.
    void refine(std::vector<int>& colour) {
        offset_.resize(n_);
        length_.resize(n_);
        order_.resize(n_);
        for (;;) {
            pool_.clear();
            for (int v = 0; v < n_; ++v) {
                offset_[v] = static_cast<int>(pool_.size());
                pool_.push_back(colour[v]);
                std::uint64_t row = adj_[v];
                while (row) {
                    int u = std::countr_zero(row);
                    row &= row - 1;
                    pool_.push_back(colour[u]);
                }
                length_[v] = static_cast<int>(pool_.size()) - offset_[v];
                std::sort(pool_.begin() + offset_[v] + 1, pool_.end());
            }
            auto sig_less = [&](int a, int b) {
                return std::lexicographical_compare(
                    pool_.begin() + offset_[a], pool_.begin() + offset_[a] + length_[a],
                    pool_.begin() + offset_[b], pool_.begin() + offset_[b] + length_[b]);
            };
            auto sig_eq = [&](int a, int b) {
                return length_[a] == length_[b] &&
                       std::equal(pool_.begin() + offset_[a],
                                  pool_.begin() + offset_[a] + length_[a],
                                  pool_.begin() + offset_[b]);
            };
            std::iota(order_.begin(), order_.end(), 0);
            std::sort(order_.begin(), order_.end(), sig_less);
            bool changed = false;
            int rank = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && !sig_eq(order_[i], order_[i - 1])) ++rank;
                if (colour[order_[i]] != rank) changed = true;
            }
            rank = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && !sig_eq(order_[i], order_[i - 1])) ++rank;
                colour[order_[i]] = rank;
            }
            if (!changed) return;
        }
    }

    bool discrete(const std::vector<int>& colour) const {
        std::uint64_t used = 0;
        for (int c : colour) {
            if ((used >> c) & 1) return false;
            used |= 1ULL << c;
        }
        return true;
    }

    std::string encode(const std::vector<int>& lab) const {
        std::array<int, Position::kMaxVertices> inv{};
        for (int v = 0; v < n_; ++v) inv[lab[v]] = v;
        std::string out;
        out.push_back(static_cast<char>(n_));
        for (int i = 0; i < n_; ++i) out.push_back(static_cast<char>(tint_[inv[i]]));
        int bits = 0;
        char acc = 0;
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                acc = static_cast<char>(acc << 1);
                if ((adj_[inv[i]] >> inv[j]) & 1) acc = static_cast<char>(acc | 1);
                if (++bits == 8) {
                    out.push_back(acc);
                    bits = 0;
                    acc = 0;
                }
            }
        }
        if (bits) out.push_back(static_cast<char>(acc << (8 - bits)));
        return out;
    }

    void record_leaf(const std::vector<int>& lab) {
        std::string enc = encode(lab);
        if (first_.empty()) {
            first_ = enc;
            first_lab_ = lab;
        } else if (enc == first_) {
            // lab and first_lab_ map the graph onto the same encoding, so
            // composing them yields an automorphism.
            std::array<int, Position::kMaxVertices> pos_to_vertex{};
            for (int v = 0; v < n_; ++v) pos_to_vertex[lab[v]] = v;
            std::vector<int> sigma(n_);
            for (int v = 0; v < n_; ++v) sigma[v] = pos_to_vertex[first_lab_[v]];
            gens_.push_back(std::move(sigma));
        }
        if (best_.empty() || enc < best_) best_ = std::move(enc);
    }

    // Orbits of the generators that fix the current prefix pointwise.
    std::vector<int> prefix_stabilizer_orbits() const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const auto& g : gens_) {
            bool fixes = true;
            for (int p : prefix_) {
                if (g[p] != p) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(g[v]);
                if (a != b) parent[a] = b;
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    void search(std::vector<int> colour) {
        refine(colour);
        if (discrete(colour)) {
            record_leaf(colour);
            return;
        }
        // Target: the first non-singleton cell in canonical cell order.
        std::array<int, Position::kMaxVertices> count{};
        for (int c : colour) ++count[c];
        int target = 0;
        while (count[target] < 2) ++target;
        std::vector<int> members;
        for (int v = 0; v < n_; ++v) {
            if (colour[v] == target) members.push_back(v);
        }
        std::vector<int> explored;
        for (int v : members) {
            if (!explored.empty()) {
                std::vector<int> orbit = prefix_stabilizer_orbits();
                bool skip = false;
                for (int u : explored) {
                    if (orbit[u] == orbit[v]) {
                        skip = true;
                        break;
                    }
                }
                if (skip) continue;
            }
            std::vector<int> next(n_);
            for (int u = 0; u < n_; ++u) next[u] = colour[u] * 2 + (u == v ? 0 : 1);
            prefix_.push_back(v);
            search(std::move(next));
            prefix_.pop_back();
            explored.push_back(v);
        }
    }
};

}  // namespace

namespace detail {

std::string canonical_key_raw(int n, const std::uint64_t* adj, const std::uint8_t* tint) {
    return KeySearch(n, adj, tint).run();
}

}  // namespace detail

std::string canonical_key(const Position& p) {
    detail::Board b = detail::to_board(p);
    return detail::canonical_key_raw(b.n, b.adj.data(), b.tint.data());
}

}  // namespace snort
