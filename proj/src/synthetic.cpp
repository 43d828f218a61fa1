#include "modfilter/synthetic.hpp"

#include <cmath>
#include <stdexcept>

namespace modfilter {

namespace {

Rgb lerp_color(const Rgb& from, const Rgb& to, double t) {
    auto mix = [t](int a, int b) {
        return static_cast<int>(std::lround(a + (b - a) * t));
    };
    return {mix(from.r, to.r), mix(from.g, to.g), mix(from.b, to.b)};
}

} // namespace

Image generate_synthetic(const SyntheticSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0)
        throw std::invalid_argument("SyntheticSpec: dimensions must be positive");
    if (spec.channels != 1 && spec.channels != 3)
        throw std::invalid_argument("SyntheticSpec: channels must be 1 or 3");

    Image out(spec.width, spec.height, spec.channels);

    if (spec.kind == SyntheticKind::kSolidRect) {
        const int rw = spec.width / 2;
        const int rh = spec.height / 2;
        const int x0 = (spec.width - rw) / 2;
        const int y0 = (spec.height - rh) / 2;
        for (int y = 0; y < spec.height; ++y) {
            for (int x = 0; x < spec.width; ++x) {
                const bool inside = rw > 0 && rh > 0 && x >= x0 && x < x0 + rw && y >= y0 &&
                                    y < y0 + rh;
                out.set_pixel(x, y, inside ? spec.foreground : spec.background);
            }
        }
        return out;
    }

    // Solid left half, horizontal gradient across the right half.
    const int split = spec.width / 2;
    const int span = spec.width - 1 - split;
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            if (x < split) {
                out.set_pixel(x, y, spec.background);
            } else {
                const double t = span > 0 ? static_cast<double>(x - split) / span : 0.0;
                out.set_pixel(x, y, lerp_color(spec.gradient_from, spec.gradient_to, t));
            }
        }
    }
    return out;
}

} // namespace modfilter
