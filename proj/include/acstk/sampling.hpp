#pragma once

#include "acstk/rational.hpp"

#include <cstdint>
#include <random>

namespace acstk {

/// Deterministic RNG stream. The mapping from engine output to values is done
/// here rather than through <random> distributions so that output is
/// identical across standard library implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(mix(seed) ^ mix(stream + 0x9e3779b97f4a7c15ULL)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// num/den with |num| <= max_num and 1 <= den <= max_den.
    Rational rational(long max_num = 4, long max_den = 4) {
        Rational q(integer(-max_num, max_num), integer(1, max_den));
        q.canonicalize();
        return q;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace acstk
