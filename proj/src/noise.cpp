#include "modfilter/noise.hpp"

#include <stdexcept>

namespace modfilter {

std::uint32_t lcg_next(std::uint32_t state, const NoiseSpec& spec) {
    // uint32 arithmetic is the mod-2^32 reduction
    return spec.lcg_a * state + spec.lcg_c;
}

namespace {

// One sequential draw stream; coordinates first, then colors, exactly as
// inject() consumes them.
class LcgStream {
public:
    explicit LcgStream(const NoiseSpec& spec) : spec_(spec), state_(spec.seed) {}

    std::uint32_t next() {
        state_ = lcg_next(state_, spec_);
        return state_;
    }

private:
    NoiseSpec spec_;
    std::uint32_t state_;
};

void check_spec(const NoiseSpec& spec) {
    if (spec.p < 0.0 || spec.p > 1.0)
        throw std::invalid_argument("NoiseSpec: p must be within [0, 1]");
}

DamageMask draw_damage(LcgStream& stream, const NoiseSpec& spec, int width, int height) {
    check_spec(spec);
    DamageMask mask(width, height);
    const std::size_t quota = static_cast<std::size_t>(
        spec.p * static_cast<double>(width) * static_cast<double>(height));
    std::size_t flagged = 0;
    while (flagged < quota) {
        const int x = static_cast<int>(stream.next() % static_cast<std::uint32_t>(width));
        const int y = static_cast<int>(stream.next() % static_cast<std::uint32_t>(height));
        if (mask.at(x, y)) continue;
        mask.set(x, y, true);
        ++flagged;
    }
    return mask;
}

} // namespace

DamageMask sample_damage(const NoiseSpec& spec, int width, int height) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("sample_damage: dimensions must be positive");
    LcgStream stream(spec);
    return draw_damage(stream, spec, width, height);
}

InjectResult inject(const Image& image, const NoiseSpec& spec) {
    LcgStream stream(spec);
    DamageMask mask = draw_damage(stream, spec, image.width(), image.height());

    Image noised = image;
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            if (!mask.at(x, y)) continue;
            if (spec.mode == NoiseMode::kSaltPepper) {
                const int v = (stream.next() % 2 == 0) ? 0 : 255;
                noised.set_pixel(x, y, {v, v, v});
            } else {
                Rgb color;
                color.r = static_cast<int>(stream.next() % 256);
                if (image.channels() == 3) {
                    color.g = static_cast<int>(stream.next() % 256);
                    color.b = static_cast<int>(stream.next() % 256);
                } else {
                    color.g = color.r;
                    color.b = color.r;
                }
                noised.set_pixel(x, y, color);
            }
        }
    }
    return {std::move(noised), std::move(mask)};
}

} // namespace modfilter
