#ifndef GAZEKIT_RNG_HPP
#define GAZEKIT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace gazekit {

/// Deterministic random source with a fully documented algorithm so that
/// streams can be reproduced bit-for-bit in other languages:
///
///   engine    std::mt19937_64 seeded directly with the 64-bit seed
///             (the engine and its single-value seeding procedure are
///             specified by the C++ standard, so output is identical on
///             every conforming implementation)
///   uniform   (next_u64() >> 11) * 2^-53            -> double in [0, 1)
///   gaussian  Box-Muller on a fresh uniform pair:
///             u1 = 1 - uniform()  (shifted into (0, 1] so ln is finite)
///             u2 = uniform()
///             r  = sqrt(-2 ln u1)
///             returns r*cos(2*pi*u2) now, caches r*sin(2*pi*u2) for the
///             next call (each fresh pair consumes exactly two engine draws)
///
/// std::normal_distribution / std::uniform_real_distribution are avoided on
/// purpose: their algorithms are implementation-defined and differ between
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Standard normal deviate via Box-Muller (see class comment).
    double next_gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = 1.0 - next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(angle);
        has_cached_ = true;
        return r * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace gazekit

#endif  // GAZEKIT_RNG_HPP
