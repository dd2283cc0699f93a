#pragma once

#include <array>
#include <cstdint>

namespace musselseg::rng {

/// Stream labels. Every random value in the project is a pure function of
/// (seed, purpose, a, b, c), so draws never depend on evaluation order or
/// thread scheduling.
enum class Purpose : std::uint64_t {
    init_coord = 1,
    init_activation,
    init_levy,
    floor_redraw,
    levy_step,
    subsample,
    kmeans_pick,
    blob_gauss,
    blob_noise,
    bench_repeat,
};

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

inline std::uint64_t keyed_bits(std::uint64_t seed, Purpose purpose,
                                std::uint64_t a = 0, std::uint64_t b = 0,
                                std::uint64_t c = 0) {
    std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
    h = mix64(h ^ (static_cast<std::uint64_t>(purpose) * 0xD6E8FEB86659FD93ULL));
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

/// Uniform in [0, 1).
inline double keyed_unit(std::uint64_t seed, Purpose purpose, std::uint64_t a = 0,
                         std::uint64_t b = 0, std::uint64_t c = 0) {
    return static_cast<double>(keyed_bits(seed, purpose, a, b, c) >> 11) * 0x1.0p-53;
}

/// Independent standard-normal pair (Box-Muller) keyed by (seed, purpose, a, b).
std::array<double, 2> keyed_gaussian_pair(std::uint64_t seed, Purpose purpose,
                                          std::uint64_t a, std::uint64_t b);

}  // namespace musselseg::rng
