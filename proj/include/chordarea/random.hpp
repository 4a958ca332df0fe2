#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "chordarea/vec.hpp"

namespace chordarea {

/// SplitMix64 finalizer, used to derive independent substreams.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** generator. Seeding and the double conversion are fully
/// specified here so that estimates are bit-identical across standard libraries.
class Rng {
public:
    /// Substream `stream` of master seed `seed`.
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t z = mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL);
        for (auto& s : state_) {
            z = mix64(z);
            s = z;
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform direction on the unit sphere.
    Vec3 unit_vector() {
        const double z = uniform(-1.0, 1.0);
        const double phi = 2.0 * std::numbers::pi * uniform();
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {rho * std::cos(phi), rho * std::sin(phi), z};
    }

    /// Uniform point in the disk of the given radius, as (u, v).
    void disk(double radius, double& u, double& v) {
        const double rho = radius * std::sqrt(uniform());
        const double phi = 2.0 * std::numbers::pi * uniform();
        u = rho * std::cos(phi);
        v = rho * std::sin(phi);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4]{};
};

}  // namespace chordarea
