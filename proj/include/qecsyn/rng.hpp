#pragma once

#include <cstdint>

namespace qecsyn {

// Counter-based RNG: every draw is a pure function of (seed, stream, counter),
// so shots can be generated in any order or in parallel with identical output.

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t counter_hash(uint64_t seed, uint64_t stream, uint64_t counter) {
    uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ULL);
    h = splitmix64(h ^ stream);
    return splitmix64(h ^ counter);
}

/// Uniform double in [0, 1) from 53 random bits.
inline double counter_uniform(uint64_t seed, uint64_t stream, uint64_t counter) {
    return double(counter_hash(seed, stream, counter) >> 11) * 0x1.0p-53;
}

/// Small sequential generator seeded from a counter stream; used where a
/// stateless draw per event would be awkward (shuffles, rejection loops).
class SeqRng {
  public:
    explicit SeqRng(uint64_t seed, uint64_t stream = 0)
        : state_(splitmix64(splitmix64(seed ^ 0x9e3779b97f4a7c15ULL) ^ stream)) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64(state_);
    }
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, n).
    uint64_t next_below(uint64_t n) {
        // 128-bit multiply rejection-free map; bias < 2^-64, irrelevant here.
        return uint64_t((__uint128_t(next_u64()) * n) >> 64);
    }
    /// Standard normal via Box-Muller.
    double next_normal();

  private:
    uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// Deterministic Binomial(n, p) draw. Exact inversion for small n*p, normal
/// approximation for large counts (adequate for bootstrap resampling).
uint64_t binomial_draw(SeqRng& rng, uint64_t n, double p);

}  // namespace qecsyn
