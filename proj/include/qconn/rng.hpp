#pragma once

#include <cstdint>
#include <random>

namespace qconn {

// mt19937_64 with hand-rolled output mappings, so identical seeds give
// identical streams on every standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform double in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n); n must be >= 1
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
    }

    bool chance(double p) { return uniform() < p; }

private:
    std::mt19937_64 eng_;
};

// splitmix64 finalizer, used to hash seed components together.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ mix64(b));
}

// Per-trial seed, a pure function of (base, n, k, trial).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n, std::uint64_t k,
                                 std::uint64_t trial) {
    std::uint64_t s = mix64(base);
    s = mix_seed(s, n);
    s = mix_seed(s, k);
    s = mix_seed(s, trial);
    return s;
}

} // namespace qconn
