#pragma once

// Portable deterministic sampling of rationals, elements and parameters.
// Draws are taken straight from mt19937_64 (whose output sequence is fixed
// by the standard) rather than through <random> distributions, so reports
// are identical across standard libraries.

#include "avw/element.hpp"
#include "avw/factory.hpp"

#include <cstdint>
#include <random>

namespace avw {

/// Published default seed: the ASCII bytes of "AVW1".
inline constexpr std::uint64_t kDefaultSeed = 0x41565731;

class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }

    /// p/q with |p| <= height and 1 <= q <= height.
    Scalar rational(long height);
    Element element(std::size_t dim, long height);
    Element nonzero_element(std::size_t dim, long height);
    /// Purely imaginary element with small rational coordinates.
    Element imaginary(std::size_t dim, long height);

    /// Random rational unit quaternion (Cayley parametrization of a random
    /// imaginary element, with a random overall sign).
    Element unit_quaternion(long height = 3);
    /// Random rational unit in Im(H).
    Element imaginary_unit(long height = 3);
    /// Random isometry seed: skew-symmetric, zero first row and column,
    /// entries drawn from rationals of the given height.
    IsometrySeed isometry_seed(std::size_t dim = 8, long height = 2);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// The published isometry seed: Rng(kDefaultSeed).isometry_seed(8, 2).
IsometrySeed published_isometry_seed();
/// The cracovian algebra (O^f)_* at e = 1 for the published f.
AlgebraSpec published_cracovian();

}  // namespace avw
