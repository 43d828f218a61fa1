#ifndef MODFILTER_LATTICE_HPP
#define MODFILTER_LATTICE_HPP

#include <utility>
#include <vector>

#include "modfilter/image.hpp"
#include "modfilter/modularity.hpp"

namespace modfilter {

struct Coord {
    int x = 0;
    int y = 0;

    friend bool operator==(const Coord&, const Coord&) = default;
};

struct GraphConfig {
    /// Color-distance scale of the edge weight, on the 0-255 intensity
    /// scale. 20 puts a full-range jump at ~22 decay constants.
    double h = 20.0;
};

/// The pixels of one clipped 3x3 window in row-major order, plus the
/// position of the center within that list. Window graphs index their
/// vertices by this ordering.
struct WindowContext {
    Coord center;
    std::vector<Coord> members;
    int center_index = 0;
};

/// d(p,q) = exp(-|p-q|_rgb / h), in (0, 1]; 1 iff the colors are equal.
double edge_weight(const Rgb& p, const Rgb& q, const GraphConfig& config);

/// In-bounds pixels at Chebyshev distance 1 of (x,y), row-major order:
/// 8 for interior, 5 for edge, 3 for corner pixels.
std::vector<Coord> neighbors(int x, int y, int width, int height);

/// King-graph over the clipped 3x3 window centered at `center`, with
/// edge_weight on every Chebyshev-1 pair, zero self-weights, normalized
/// by its own total. Throws DegenerateGraphError for a 1x1 image.
std::pair<ModularityMatrix, WindowContext> window_graph(const Image& image, Coord center,
                                                        const GraphConfig& config);

inline constexpr int kDefaultGlobalCap = 4096;

/// Whole-image king-graph (vertex index = y*width + x). Dense, so capped;
/// intended for oracle tests and the optional global detection scope.
/// Throws std::length_error past the cap.
ModularityMatrix global_graph(const Image& image, const GraphConfig& config,
                              int max_vertices = kDefaultGlobalCap);

} // namespace modfilter

#endif // MODFILTER_LATTICE_HPP
