#pragma once

#include <cstdint>
#include <random>

namespace snort {

// Deterministic random source. mt19937_64 output is fully specified by the
// standard; the derived draws below avoid std::uniform_int_distribution,
// whose mapping is implementation-defined, so seeded runs are reproducible
// bit-for-bit across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 eng_;
};

}  // namespace snort
