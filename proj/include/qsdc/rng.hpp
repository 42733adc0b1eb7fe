#pragma once

#include <cstdint>

namespace qsdc {

// splitmix64 finalizer; good avalanche, used for seed derivation and as the
// core of the simulation RNG.
inline std::uint64_t splitmix64_mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Small counter-based generator. 8 bytes of state, so per-photon and
/// per-trial substreams are cheap to create and results do not depend on
/// the schedule that consumes them.
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

  private:
    std::uint64_t state_;
};

/// Independent substream `stream`/`lane` of a master seed.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t lane = 0) {
    return Rng(splitmix64_mix(seed ^ splitmix64_mix(stream ^ splitmix64_mix(lane))));
}

/// Uniform double in [0, 1).
inline double uniform_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int uniform_bit(Rng& rng) {
    return static_cast<int>(rng() >> 63);
}

/// Uniform integer in [0, n), n > 0. Lemire rejection, exactly uniform.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = rng();
        const unsigned __int128 m = static_cast<unsigned __int128>(r) * n;
        if (static_cast<std::uint64_t>(m) >= threshold)
            return static_cast<std::uint64_t>(m >> 64);
    }
}

} // namespace qsdc
