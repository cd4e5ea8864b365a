#pragma once

#include <cstdint>
#include <vector>

namespace backbone {

// Counter-based splittable generator (SplitMix64 core). We deliberately avoid
// <random> distributions here: std::uniform_int_distribution and std::shuffle
// are implementation-defined, and sweep outputs must be byte-identical for a
// given seed on every platform. Not cryptographic.
class Rng {
public:
    Rng() : state_(0) {}
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [0, n), unbiased (multiply-shift with rejection)
    uint64_t bounded(uint64_t n) {
        if (n == 0) return 0;
        // reject the partial block so every residue is equally likely
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t x = next_u64();
            unsigned __int128 wide = static_cast<unsigned __int128>(x) * n;
            if (static_cast<uint64_t>(wide) >= threshold)
                return static_cast<uint64_t>(wide >> 64);
        }
    }

    int bounded_int(int n) { return static_cast<int>(bounded(static_cast<uint64_t>(n))); }

    // Derive an independent stream; children with distinct tags do not collide
    // in practice (full-avalanche mix of state and tag).
    Rng split(uint64_t tag) const {
        uint64_t s = mix(state_ ^ mix(tag + 0x2545f4914f6cdd1dull));
        return Rng(s);
    }

    // Fisher-Yates, spelled out so draw order is pinned down
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = bounded(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    uint64_t state_;
};

} // namespace backbone
