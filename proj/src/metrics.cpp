#include "modfilter/metrics.hpp"

#include <cmath>
#include <cstdlib>

namespace modfilter {

double image_distance(const Image& a, const Image& c) {
    if (a.width() != c.width() || a.height() != c.height() || a.channels() != c.channels())
        throw std::invalid_argument("image_distance: shapes differ");

    const double n_pixels = static_cast<double>(a.pixel_count());
    double worst = 0.0;
    for (int ch = 0; ch < a.channels(); ++ch) {
        double sum = 0.0;
        for (int y = 0; y < a.height(); ++y)
            for (int x = 0; x < a.width(); ++x)
                sum += std::abs(static_cast<int>(a.value(x, y, ch)) -
                                static_cast<int>(c.value(x, y, ch)));
        worst = std::max(worst, sum / n_pixels);
    }
    return worst;
}

double relative_improvement(const Image& orig, const Image& noisy, const Image& restored) {
    const double d_noisy = image_distance(orig, noisy);
    if (d_noisy == 0.0)
        throw std::domain_error("relative_improvement: noisy image equals the original");
    const double d_restored = image_distance(orig, restored);
    return (d_noisy - d_restored) / d_noisy * 100.0;
}

MaskScores mask_scores(const DamageMask& truth, const DamageMask& detected) {
    if (truth.width() != detected.width() || truth.height() != detected.height())
        throw std::invalid_argument("mask_scores: dimensions differ");

    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    for (int y = 0; y < truth.height(); ++y) {
        for (int x = 0; x < truth.width(); ++x) {
            const bool t = truth.at(x, y);
            const bool d = detected.at(x, y);
            if (t && d) ++tp;
            else if (!t && d) ++fp;
            else if (t && !d) ++fn;
        }
    }
    MaskScores scores;
    scores.precision = (tp + fp) == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    scores.recall = (tp + fn) == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    return scores;
}

} // namespace modfilter
