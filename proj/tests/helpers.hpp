#pragma once

#include <random>

// Deterministic uniform draws: a fixed-seed Mersenne Twister with an
// explicit bits-to-double map, so test data is identical across platforms
// and standard library versions.
namespace testutil {

inline double unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * unit(gen);
}

}  // namespace testutil
