#pragma once

#include <cstdint>

namespace parityproj {

// splitmix64 finalizer (Steele/Lea/Flood), used for seeding and key mixing.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman & Vigna), state seeded through splitmix64.
class Xoshiro256 {
  public:
    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) {
            sm += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [-a, a).
    double uniform_sym(double a) { return a * (2.0 * uniform01() - 1.0); }

  private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::uint64_t s_[4];
};

// Independent stream per (seed, dimension, trial). Trials are addressable in
// any order, so partitioning them across workers cannot change what a trial
// draws.
inline Xoshiro256 make_trial_rng(std::uint64_t seed, int dimension, std::uint64_t trial) {
    std::uint64_t k = mix64(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(dimension + 1)));
    k = mix64(k ^ (0xbf58476d1ce4e5b9ULL * (trial + 1)));
    return Xoshiro256(k);
}

} // namespace parityproj
