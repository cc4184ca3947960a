#ifndef SVLAB_RNG_HPP
#define SVLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace svlab {

/**
 * Deterministic RNG wrapper.  Sampling uses explicit modulo reduction on
 * the raw 64-bit stream instead of std distributions, whose outputs are not
 * pinned down by the standard; the produced sequences are therefore
 * identical across platforms and standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

} // namespace svlab

#endif
