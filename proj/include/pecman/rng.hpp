#pragma once

#include <cstdint>
#include <random>

namespace pecman {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Mixes (seed, stream) into an independent sub-seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
    splitmix64(s);
    return splitmix64(s);
}

// Deterministic random stream. All helpers are built directly on the raw
// mt19937_64 output so results are identical across standard libraries.
class RngStream {
  public:
    explicit RngStream(uint64_t seed) : engine_(seed) {}

    static RngStream derive(uint64_t seed, uint64_t stream) {
        return RngStream(mix_seed(seed, stream));
    }

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Uniform integer in [0, n); n > 0.
    uint64_t uniform_int(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    bool chance(double p) { return uniform() < p; }

  private:
    std::mt19937_64 engine_;
};

} // namespace pecman
