#pragma once

// Deterministic RNG for measurement sampling: splitmix64, so transcripts are
// byte-for-byte reproducible across platforms. Per-trial streams are derived
// by a splittable counter (seed, trial) -> stream.

#include <cstdint>

namespace gf {

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    static Rng for_trial(uint64_t seed, uint64_t trial) {
        Rng r(seed);
        r.state_ ^= 0x9e3779b97f4a7c15ULL * (trial + 1);
        r.next();
        return r;
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool bit() { return next() >> 63; }

    // uniform in [0,1) with 53-bit resolution
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    uint64_t below(uint64_t n) { return next() % n; }

private:
    uint64_t state_;
};

}  // namespace gf
