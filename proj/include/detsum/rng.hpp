#pragma once

#include <cstdint>
#include <random>

namespace detsum {

/// Seeded random source with fully specified cross-platform behavior:
/// the engine is std::mt19937_64 (bit-exact by the standard) and bounded
/// draws use explicit rejection instead of std::uniform_int_distribution,
/// whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(scramble(seed)) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform draw from [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    /// Derives a decorrelated stream seed; used to give independent trials,
    /// matrices and steps their own reproducible substreams.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

private:
    static std::uint64_t scramble(std::uint64_t x);
    std::mt19937_64 gen_;
};

}  // namespace detsum
