#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace misoic {

// splitmix64 (Vigna's public-domain mixer). Small state, full 64-bit output,
// and perfectly reproducible across platforms, which is all we need here.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in the open interval (0, 1); never returns 0 so log() is safe.
    double uniform01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

    // Uniform in [0, 2*pi).
    double uniform_angle() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 * 6.283185307179586476925286766559;
    }

private:
    std::uint64_t state_;
};

// One Box-Muller pair of independent standard normals. Each call consumes
// exactly two uniforms, so the draw layout is fixed by the seed alone.
inline std::pair<double, double> gauss_pair(SplitMix64& rng) {
    double u1 = rng.uniform01();
    double u2 = rng.uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double ang = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(ang), r * std::sin(ang)};
}

} // namespace misoic
