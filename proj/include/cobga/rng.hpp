#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace cobga {

using u64 = std::uint64_t;

// One SplitMix64 step. Used for deriving independent stream seeds.
constexpr u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a child seed from (base, a, b). Streams for distinct (a, b) pairs
// are decorrelated, so adding a new stream never perturbs existing ones.
constexpr u64 derive_seed(u64 base, u64 a, u64 b = 0) {
    u64 s = splitmix64(base);
    s = splitmix64(s ^ a);
    return splitmix64(s ^ b);
}

// FNV-1a over a byte string; used to hash textual labels into seed space
// and to fingerprint emitted files.
constexpr u64 fnv1a64(std::string_view s) {
    u64 h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Seedable random stream. The engine is std::mt19937_64 (whose output
// sequence the standard pins down) and all mappings to ints/doubles are
// implemented here rather than via std::*_distribution, so a given seed
// produces the same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(u64 seed) : eng_(seed) {}

    u64 next() { return eng_(); }

    // Uniform in [0, bound), bound >= 1. Multiply-shift reduction.
    u64 below(u64 bound) {
        return static_cast<u64>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<u64>(bound))); }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    bool coin() { return (next() >> 63) != 0; }

    // Box-Muller; consumes exactly two draws per call.
    double normal(double mean, double sd) {
        double u1 = 1.0 - unit();  // (0, 1]
        double u2 = unit();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
        return mean + sd * z;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace cobga
