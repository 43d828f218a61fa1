#ifndef MODFILTER_NOISE_HPP
#define MODFILTER_NOISE_HPP

#include <cstdint>

#include "modfilter/image.hpp"

namespace modfilter {

enum class NoiseMode {
    kRandomValue, ///< each damaged channel gets an independent draw mod 256
    kSaltPepper,  ///< whole pixel goes to 0 or 255, parity of one draw
};

/// Reproducible impulse noise: fraction p of pixels damaged, coordinates
/// and colors both drawn from one 32-bit linear congruential stream.
struct NoiseSpec {
    double p = 0.0;
    NoiseMode mode = NoiseMode::kRandomValue;
    std::uint32_t seed = 1;
    std::uint32_t lcg_a = 1664525u;
    std::uint32_t lcg_c = 1013904223u;
    // modulus is fixed at 2^32 (native uint32 wraparound)
};

/// (a*state + c) mod 2^32.
std::uint32_t lcg_next(std::uint32_t state, const NoiseSpec& spec);

/// Flags exactly floor(p * width * height) distinct pixels: repeated
/// draws give x = draw mod width then y = next draw mod height,
/// duplicates are skipped until the quota is met.
DamageMask sample_damage(const NoiseSpec& spec, int width, int height);

struct InjectResult {
    Image image;
    DamageMask mask;
};

/// Damages the sampled pixels (colors continue the same LCG stream, in
/// raster order over the flagged pixels); everything else is bit-identical.
InjectResult inject(const Image& image, const NoiseSpec& spec);

} // namespace modfilter

#endif // MODFILTER_NOISE_HPP
