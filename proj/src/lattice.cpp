#include "modfilter/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace modfilter {

double edge_weight(const Rgb& p, const Rgb& q, const GraphConfig& config) {
    if (config.h <= 0.0) throw std::invalid_argument("edge_weight: h must be positive");
    const double dr = p.r - q.r;
    const double dg = p.g - q.g;
    const double db = p.b - q.b;
    return std::exp(-std::sqrt(dr * dr + dg * dg + db * db) / config.h);
}

std::vector<Coord> neighbors(int x, int y, int width, int height) {
    if (x < 0 || x >= width || y < 0 || y >= height)
        throw std::out_of_range("neighbors: coordinates out of range");
    std::vector<Coord> out;
    out.reserve(8);
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const int nx = x + dx;
            const int ny = y + dy;
            if (nx >= 0 && nx < width && ny >= 0 && ny < height) out.push_back({nx, ny});
        }
    }
    return out;
}

std::pair<ModularityMatrix, WindowContext> window_graph(const Image& image, Coord center,
                                                        const GraphConfig& config) {
    if (!image.in_bounds(center.x, center.y))
        throw std::out_of_range("window_graph: center out of range");

    WindowContext ctx;
    ctx.center = center;
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            const int nx = center.x + dx;
            const int ny = center.y + dy;
            if (!image.in_bounds(nx, ny)) continue;
            if (nx == center.x && ny == center.y)
                ctx.center_index = static_cast<int>(ctx.members.size());
            ctx.members.push_back({nx, ny});
        }
    }

    const int n = static_cast<int>(ctx.members.size());
    SquareMatrix raw(n);
    for (int i = 0; i < n; ++i) {
        const Rgb pi = image.pixel_unchecked(ctx.members[i].x, ctx.members[i].y);
        for (int j = i + 1; j < n; ++j) {
            const Coord& a = ctx.members[i];
            const Coord& b = ctx.members[j];
            if (std::abs(a.x - b.x) > 1 || std::abs(a.y - b.y) > 1) continue;
            raw.set_edge(i, j, edge_weight(pi, image.pixel_unchecked(b.x, b.y), config));
        }
    }
    return {normalize(raw), std::move(ctx)};
}

ModularityMatrix global_graph(const Image& image, const GraphConfig& config, int max_vertices) {
    const long long n_pixels =
        static_cast<long long>(image.width()) * static_cast<long long>(image.height());
    if (n_pixels > max_vertices)
        throw std::length_error("global_graph: image exceeds the dense vertex cap");

    const int w = image.width();
    const int h = image.height();
    const int n = static_cast<int>(n_pixels);
    SquareMatrix raw(n);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int i = y * w + x;
            const Rgb pi = image.pixel_unchecked(x, y);
            // Only forward neighbors; set_edge mirrors.
            for (const Coord& q : neighbors(x, y, w, h)) {
                const int j = q.y * w + q.x;
                if (j <= i) continue;
                raw.set_edge(i, j, edge_weight(pi, image.pixel_unchecked(q.x, q.y), config));
            }
        }
    }
    return normalize(raw);
}

} // namespace modfilter
