#pragma once

#include <cstdint>
#include <random>

namespace sensecore {

// SplitMix64 step (Steele et al.), used only for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Counter-based stream derivation: stream i of a master seed is a fixed
// function of (master, i), so results never depend on execution order or
// on how trials are partitioned across workers.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s ^= stream * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull;
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x9e3779b97f4a7c15ull);
}

inline std::mt19937_64 make_engine(std::uint64_t master, std::uint64_t stream = 0) {
    return std::mt19937_64(derive_seed(master, stream));
}

} // namespace sensecore
