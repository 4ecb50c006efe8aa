#pragma once

#include <cmath>
#include <cstdint>

namespace tsecon {

// Deterministic generators used everywhere randomness is needed. The standard
// library distributions are implementation-defined, so fixture stability
// requires owning the whole chain: SplitMix64 for seeding and stream
// derivation, xoshiro256++ for uniforms, Box-Muller for Gaussians.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Child seed for substream `index` of `base`: one SplitMix64 step from the
// offset state. Used for per-variable and per-replication streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    return splitmix64(s);
}

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on (0,1): 53-bit mantissa, offset so 0 is excluded.
    double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

// Standard normal variates via the Box-Muller transform; generates in pairs.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.uniform();
        const double u2 = rng_.uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double uniform() { return rng_.uniform(); }

private:
    Xoshiro256pp rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace tsecon
