#pragma once
// Deterministic RNG used for all sampling in the toolkit.
//
// Every draw must be reproducible bit-for-bit across platforms and across
// degrees of parallelism, so we avoid std::uniform_*_distribution (whose
// output is implementation-defined) and implement the few distributions we
// need on top of xoshiro256**. Independent streams are derived from a master
// seed and a stream name, so concurrent generators never share state.

#include <cstdint>
#include <cmath>
#include <string_view>
#include <vector>

namespace entprobe {

// SplitMix64, used only to expand seeds into xoshiro state.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// FNV-1a over a stream name; mixed into the seed for per-task streams.
inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// xoshiro256** by Blackman & Vigna (public domain reference implementation).
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    // Stream derived from (seed, name): same name, same draws, regardless of
    // which thread runs the generator or in which order streams are created.
    Rng(uint64_t seed, std::string_view stream) : Rng(seed ^ fnv1a64(stream)) {}

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Unbiased uniform integer in [0, bound). Rejection sampling.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    size_t index(size_t n) { return static_cast<size_t>(below(n)); }

    bool bernoulli(double p) { return next_double() < p; }

    // Standard normal via Box-Muller (cosine branch only, no cached state).
    double normal() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace entprobe
