#ifndef MODFILTER_IMPULSE_FILTER_HPP
#define MODFILTER_IMPULSE_FILTER_HPP

#include <optional>
#include <vector>

#include "modfilter/image.hpp"
#include "modfilter/lattice.hpp"

namespace modfilter {

enum class GraphScope {
    kWindow3x3, ///< modularity quantities on the 3x3 window around each pixel
    kGlobal,    ///< one whole-image graph (dense cap applies)
};

enum class Aggregation {
    kCount, ///< flag when at least min(k, #neighbors) deltas are negative
    kAll,   ///< flag only when every delta is negative (paper-literal)
};

struct FilterConfig {
    GraphConfig graph;
    GraphScope scope = GraphScope::kWindow3x3;
    /// Detection tolerance: a delta counts as negative when < -epsilon.
    double epsilon = 1e-12;
    /// Minimum count of strictly-negative neighbor deltas to flag a pixel
    /// (count aggregation). A damaged interior pixel yields 4 negative
    /// axial deltas, so 4 flags it while contour pixels stay clean.
    int k_min_negative = 4;
    /// Restoration pass limit before the full-range fallback.
    int max_passes = 8;
    Aggregation aggregation = Aggregation::kCount;
};

struct NeighborDelta {
    Coord neighbor;
    double delta;
};

struct DenoiseResult {
    Image image;
    DamageMask mask;
};

/// Merge delta of p with each of its in-bounds neighbors (row-major
/// order), evaluated on the graph selected by config.scope. Empty for a
/// pixel with no neighbors (1x1 image).
std::vector<NeighborDelta> pixel_deltas(const Image& image, Coord p, const FilterConfig& config);

/// Runs the delta sign test over every pixel. A pixel with an empty
/// delta list is never flagged.
DamageMask detect(const Image& image, const FilterConfig& config);

/// Rechooses the color of flagged pixel p from its usable (unflagged)
/// neighbors: per channel, scans every value in [min, max] of the usable
/// neighbors and keeps the one whose window-graph delta toward the best
/// usable neighbor is largest (ties -> smallest value). Returns nullopt
/// when no neighbor is usable yet (deferral).
std::optional<Rgb> restore_pixel(const Image& image, const DamageMask& mask, Coord p,
                                 const FilterConfig& config);

/// Restores all flagged pixels in raster order; restored pixels feed
/// later restorations. Deferred pixels are retried for up to
/// config.max_passes full passes, then fall back to scanning the full
/// [0,255] range against all in-bounds neighbors. Unflagged pixels are
/// copied bit-exactly.
Image restore(const Image& image, const DamageMask& mask, const FilterConfig& config);

/// detect + restore.
DenoiseResult denoise(const Image& image, const FilterConfig& config);

} // namespace modfilter

#endif // MODFILTER_IMPULSE_FILTER_HPP
