#ifndef CROSSWALK_RNG_HPP
#define CROSSWALK_RNG_HPP

#include <cstdint>
#include <random>

namespace crosswalk {

// splitmix64 finalizer; cheap, well-distributed seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Episode stream seed from (master seed, scenario id, run index). Every
// random draw in a batch descends from these three values, so reruns and
// parallel schedules reproduce byte-identical results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t scenario_id,
                                 std::uint64_t run_index) {
    return mix64(mix64(mix64(master) ^ scenario_id) ^ run_index);
}

// Uniform double in [0,1) from the top 53 bits; avoids the
// implementation-defined behavior of std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace crosswalk

#endif
