#include "modfilter/impulse_filter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "modfilter/modularity.hpp"

namespace modfilter {

namespace {

void validate_config(const FilterConfig& config) {
    if (config.graph.h <= 0.0) throw std::invalid_argument("FilterConfig: h must be positive");
    if (config.epsilon < 0.0)
        throw std::invalid_argument("FilterConfig: epsilon must be non-negative");
    if (config.k_min_negative < 1 || config.k_min_negative > 8)
        throw std::invalid_argument("FilterConfig: k_min_negative must be in [1, 8]");
    if (config.max_passes < 1)
        throw std::invalid_argument("FilterConfig: max_passes must be positive");
}

bool rule_flags(const std::vector<NeighborDelta>& deltas, const FilterConfig& config) {
    if (deltas.empty()) return false;
    int negatives = 0;
    for (const NeighborDelta& d : deltas)
        if (d.delta < -config.epsilon) ++negatives;
    if (config.aggregation == Aggregation::kAll)
        return negatives == static_cast<int>(deltas.size());
    const int needed = std::min(config.k_min_negative, static_cast<int>(deltas.size()));
    return negatives >= needed;
}

std::vector<NeighborDelta> deltas_window(const Image& image, Coord p, const FilterConfig& config) {
    const auto [graph, ctx] = window_graph(image, p, config.graph);
    // Window members are the center plus exactly its neighbors, so the
    // delta list is every member except the center.
    std::vector<NeighborDelta> out;
    out.reserve(ctx.members.size() - 1);
    for (int i = 0; i < static_cast<int>(ctx.members.size()); ++i) {
        if (i == ctx.center_index) continue;
        out.push_back({ctx.members[i], delta_q(graph, ctx.center_index, i)});
    }
    return out;
}

std::vector<NeighborDelta> deltas_global(const ModularityMatrix& graph, const Image& image,
                                         Coord p) {
    std::vector<NeighborDelta> out;
    const int idx = p.y * image.width() + p.x;
    for (const Coord& q : neighbors(p.x, p.y, image.width(), image.height())) {
        const int j = q.y * image.width() + q.x;
        out.push_back({q, delta_q(graph, idx, j)});
    }
    return out;
}

// Rescoring kernel for the restoration scan. The ring (window members
// other than the center) is fixed while candidate center colors vary, so
// its pairwise weights are computed once; each candidate then costs one
// weight evaluation per ring member.
class WindowRescorer {
public:
    WindowRescorer(const Image& image, Coord center, const GraphConfig& graph)
        : graph_(graph) {
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const int nx = center.x + dx;
                const int ny = center.y + dy;
                if (!image.in_bounds(nx, ny)) continue;
                cells_[count_] = {nx, ny};
                colors_[count_] = image.pixel_unchecked(nx, ny);
                ++count_;
            }
        }
        for (int u = 0; u < count_; ++u) {
            ring_row_[u] = 0.0;
            for (int v = 0; v < count_; ++v) {
                if (v == u) continue;
                if (std::abs(cells_[u].x - cells_[v].x) > 1 ||
                    std::abs(cells_[u].y - cells_[v].y) > 1)
                    continue;
                const double w = edge_weight(colors_[u], colors_[v], graph_);
                ring_row_[u] += w;
                if (v > u) ring_sum_ += w;
            }
        }
    }

    int ring_size() const { return count_; }
    const Coord& cell(int u) const { return cells_[u]; }
    const Rgb& color(int u) const { return colors_[u]; }

    /// Best merge delta between the candidate-colored center and the
    /// scored ring members, on the window graph that candidate induces.
    double score(const Rgb& candidate, std::span<const int> scored) const {
        std::array<double, 8> wc{};
        double row_p = 0.0;
        for (int u = 0; u < count_; ++u) {
            wc[static_cast<std::size_t>(u)] = edge_weight(candidate, colors_[u], graph_);
            row_p += wc[static_cast<std::size_t>(u)];
        }
        const double m = 2.0 * (ring_sum_ + row_p);
        const double a_p = row_p / m;
        double best = -std::numeric_limits<double>::infinity();
        for (int u : scored) {
            const double e_pu = wc[static_cast<std::size_t>(u)] / m;
            const double a_u = (ring_row_[static_cast<std::size_t>(u)] +
                                wc[static_cast<std::size_t>(u)]) / m;
            best = std::max(best, 2.0 * (e_pu - a_p * a_u));
        }
        return best;
    }

private:
    GraphConfig graph_;
    std::array<Coord, 8> cells_{};
    std::array<Rgb, 8> colors_{};
    std::array<double, 8> ring_row_{};
    double ring_sum_ = 0.0;
    int count_ = 0;
};

int channel_of(const Rgb& c, int idx) {
    return idx == 0 ? c.r : (idx == 1 ? c.g : c.b);
}

void set_channel(Rgb& c, int idx, int v) {
    (idx == 0 ? c.r : (idx == 1 ? c.g : c.b)) = v;
}

// Lower median of the scored ring members' channel values; the initial
// working color before the scan replaces each channel.
int usable_median(const WindowRescorer& scorer, std::span<const int> scored, int channel) {
    std::array<int, 8> vals;
    int n = 0;
    for (int u : scored) vals[static_cast<std::size_t>(n++)] = channel_of(scorer.color(u), channel);
    std::sort(vals.begin(), vals.begin() + n);
    return vals[static_cast<std::size_t>((n - 1) / 2)];
}

std::optional<Rgb> scan_restore(const Image& image, const DamageMask& mask, Coord p,
                                const FilterConfig& config, bool fallback) {
    WindowRescorer scorer(image, p, config.graph);
    if (scorer.ring_size() == 0) return std::nullopt; // 1x1 image

    std::array<int, 8> scored_storage;
    int n_scored = 0;
    for (int u = 0; u < scorer.ring_size(); ++u) {
        const Coord& c = scorer.cell(u);
        if (fallback || !mask.at(c.x, c.y)) scored_storage[static_cast<std::size_t>(n_scored++)] = u;
    }
    if (n_scored == 0) return std::nullopt; // defer until a neighbor is usable
    const std::span<const int> scored(scored_storage.data(), static_cast<std::size_t>(n_scored));

    const int n_channels = image.channels() == 1 ? 1 : 3;
    Rgb working;
    for (int c = 0; c < n_channels; ++c) set_channel(working, c, usable_median(scorer, scored, c));
    if (image.channels() == 1) working = {working.r, working.r, working.r};

    for (int c = 0; c < n_channels; ++c) {
        int lo = 0;
        int hi = 255;
        if (!fallback) {
            lo = 255;
            hi = 0;
            for (int u : scored) {
                const int v = channel_of(scorer.color(u), c);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        int best_value = lo;
        double best_score = -std::numeric_limits<double>::infinity();
        Rgb candidate = working;
        for (int v = lo; v <= hi; ++v) {
            if (image.channels() == 1) {
                candidate = {v, v, v};
            } else {
                set_channel(candidate, c, v);
            }
            const double s = scorer.score(candidate, scored);
            if (s > best_score) {
                best_score = s;
                best_value = v;
            }
        }
        if (image.channels() == 1) {
            working = {best_value, best_value, best_value};
        } else {
            set_channel(working, c, best_value);
        }
    }
    return working;
}

} // namespace

std::vector<NeighborDelta> pixel_deltas(const Image& image, Coord p, const FilterConfig& config) {
    validate_config(config);
    if (!image.in_bounds(p.x, p.y)) throw std::out_of_range("pixel_deltas: pixel out of range");
    try {
        if (config.scope == GraphScope::kGlobal) {
            const ModularityMatrix graph = global_graph(image, config.graph);
            return deltas_global(graph, image, p);
        }
        return deltas_window(image, p, config);
    } catch (const DegenerateGraphError&) {
        return {};
    }
}

DamageMask detect(const Image& image, const FilterConfig& config) {
    validate_config(config);
    DamageMask mask(image.width(), image.height());

    if (config.scope == GraphScope::kGlobal) {
        std::optional<ModularityMatrix> graph;
        try {
            graph.emplace(global_graph(image, config.graph));
        } catch (const DegenerateGraphError&) {
            return mask; // single pixel, nothing to flag
        }
        for (int y = 0; y < image.height(); ++y)
            for (int x = 0; x < image.width(); ++x)
                mask.set(x, y, rule_flags(deltas_global(*graph, image, {x, y}), config));
        return mask;
    }

    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            std::vector<NeighborDelta> deltas;
            try {
                deltas = deltas_window(image, {x, y}, config);
            } catch (const DegenerateGraphError&) {
                continue;
            }
            mask.set(x, y, rule_flags(deltas, config));
        }
    }
    return mask;
}

std::optional<Rgb> restore_pixel(const Image& image, const DamageMask& mask, Coord p,
                                 const FilterConfig& config) {
    validate_config(config);
    if (!image.in_bounds(p.x, p.y)) throw std::out_of_range("restore_pixel: pixel out of range");
    if (mask.width() != image.width() || mask.height() != image.height())
        throw std::invalid_argument("restore_pixel: mask dimensions do not match image");
    if (!mask.at(p.x, p.y)) throw std::invalid_argument("restore_pixel: pixel is not flagged");
    return scan_restore(image, mask, p, config, /*fallback=*/false);
}

Image restore(const Image& image, const DamageMask& mask, const FilterConfig& config) {
    validate_config(config);
    if (mask.width() != image.width() || mask.height() != image.height())
        throw std::invalid_argument("restore: mask dimensions do not match image");

    Image working = image;
    DamageMask remaining = mask;

    std::vector<Coord> flagged;
    for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x)
            if (mask.at(x, y)) flagged.push_back({x, y});

    for (int pass = 0; pass < config.max_passes && !flagged.empty(); ++pass) {
        std::vector<Coord> deferred;
        for (const Coord& p : flagged) {
            const std::optional<Rgb> color =
                scan_restore(working, remaining, p, config, /*fallback=*/false);
            if (color) {
                working.set_pixel(p.x, p.y, *color);
                remaining.set(p.x, p.y, false);
            } else {
                deferred.push_back(p);
            }
        }
        if (deferred.size() == flagged.size()) {
            flagged = std::move(deferred);
            break; // no progress; further passes would not change anything
        }
        flagged = std::move(deferred);
    }

    // Anything still deferred scans the full range against all in-bounds
    // neighbors, flags ignored.
    for (const Coord& p : flagged) {
        const std::optional<Rgb> color =
            scan_restore(working, remaining, p, config, /*fallback=*/true);
        if (color) {
            working.set_pixel(p.x, p.y, *color);
            remaining.set(p.x, p.y, false);
        }
    }
    return working;
}

DenoiseResult denoise(const Image& image, const FilterConfig& config) {
    DamageMask mask = detect(image, config);
    Image restored = restore(image, mask, config);
    return {std::move(restored), std::move(mask)};
}

} // namespace modfilter
