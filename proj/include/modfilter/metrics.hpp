#ifndef MODFILTER_METRICS_HPP
#define MODFILTER_METRICS_HPP

#include <stdexcept>

#include "modfilter/image.hpp"

namespace modfilter {

/// Quantitative comparison of one restoration run.
struct EvalReport {
    double d_orig_noisy = 0.0;
    double d_orig_restored = 0.0;
    double delta_improvement_percent = 0.0;
    double precision = 1.0;
    double recall = 1.0;
};

struct MaskScores {
    double precision = 1.0;
    double recall = 1.0;
};

/// Distance between images of equal shape: per-channel mean absolute
/// difference over all pixels, maximized over channels. A pseudometric
/// with range [0, 255]; 0 iff the images are identical.
double image_distance(const Image& a, const Image& c);

/// delta = (d(orig,noisy) - d(orig,restored)) / d(orig,noisy) * 100.
/// 100 for a perfect restoration, negative when restoration made things
/// worse. Throws std::domain_error when d(orig,noisy) is zero.
double relative_improvement(const Image& orig, const Image& noisy, const Image& restored);

/// Precision = TP/(TP+FP), recall = TP/(TP+FN); each defaults to 1.0
/// when its denominator is empty.
MaskScores mask_scores(const DamageMask& truth, const DamageMask& detected);

} // namespace modfilter

#endif // MODFILTER_METRICS_HPP
