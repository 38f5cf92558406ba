#pragma once

// Open-addressing hash map with 64-bit keys for the hot memo tables. No
// erase. The all-ones key is reserved as the empty slot marker; game ids
// stay far below 2^32, so composed keys never collide with it.

#include <cstdint>
#include <vector>

namespace cgt::detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <typename V>
class FlatMap64 {
public:
    static constexpr std::uint64_t kEmpty = ~0ULL;

    FlatMap64() { rehash(1024); }

    const V* find(std::uint64_t key) const {
        std::size_t i = mix64(key) & mask_;
        for (;;) {
            const Slot& s = slots_[i];
            if (s.key == key) return &s.value;
            if (s.key == kEmpty) return nullptr;
            i = (i + 1) & mask_;
        }
    }

    void insert(std::uint64_t key, V value) {
        if ((count_ + 1) * 10 > slots_.size() * 7) rehash(slots_.size() * 2);
        std::size_t i = mix64(key) & mask_;
        for (;;) {
            Slot& s = slots_[i];
            if (s.key == kEmpty) {
                s.key = key;
                s.value = value;
                ++count_;
                return;
            }
            if (s.key == key) {
                s.value = value;
                return;
            }
            i = (i + 1) & mask_;
        }
    }

    std::size_t size() const { return count_; }

private:
    struct Slot {
        std::uint64_t key = kEmpty;
        V value{};
    };

    std::vector<Slot> slots_;
    std::size_t mask_ = 0;
    std::size_t count_ = 0;

    void rehash(std::size_t capacity) {
        std::vector<Slot> old = std::move(slots_);
        slots_.assign(capacity, Slot{});
        mask_ = capacity - 1;
        count_ = 0;
        for (const Slot& s : old) {
            if (s.key != kEmpty) insert(s.key, s.value);
        }
    }
};

}  // namespace cgt::detail
