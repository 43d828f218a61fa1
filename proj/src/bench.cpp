#include "modfilter/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "modfilter/median.hpp"
#include "modfilter/metrics.hpp"

namespace modfilter {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    const auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count();
}

} // namespace

std::vector<BenchRow> run_bench(const Image& base, const BenchOptions& options) {
    std::vector<double> ps = options.p_percent;
    std::sort(ps.begin(), ps.end());
    std::vector<std::uint32_t> seeds = options.seeds;
    std::sort(seeds.begin(), seeds.end());

    std::vector<BenchRow> rows;
    for (double p : ps) {
        if (p <= 0.0 || p >= 100.0)
            throw std::invalid_argument("run_bench: p_percent values must lie in (0, 100)");
        for (std::uint32_t seed : seeds) {
            NoiseSpec spec;
            spec.p = p / 100.0;
            spec.mode = options.noise_mode;
            spec.seed = seed;
            const InjectResult noised = inject(base, spec);

            const auto t0 = std::chrono::steady_clock::now();
            const DenoiseResult proposed = denoise(noised.image, options.filter);
            const double ms_proposed = elapsed_ms(t0);

            const auto t1 = std::chrono::steady_clock::now();
            const Image med = median_filter(noised.image);
            const double ms_median = elapsed_ms(t1);

            BenchRow row;
            row.p_percent = p;
            row.delta_proposed = relative_improvement(base, noised.image, proposed.image);
            row.delta_median = relative_improvement(base, noised.image, med);
            const MaskScores scores = mask_scores(noised.mask, proposed.mask);
            row.precision = scores.precision;
            row.recall = scores.recall;
            row.runtime_ms_proposed = ms_proposed;
            row.runtime_ms_median = ms_median;
            row.seed = seed;
            rows.push_back(row);
        }
    }

    // Per-p arithmetic means, appended with seed -1.
    const std::size_t n_data = rows.size();
    const std::size_t n_seeds = seeds.size();
    for (std::size_t i = 0; i < n_data; i += n_seeds) {
        BenchRow avg;
        avg.p_percent = rows[i].p_percent;
        avg.seed = -1;
        for (std::size_t k = 0; k < n_seeds; ++k) {
            const BenchRow& r = rows[i + k];
            avg.delta_proposed += r.delta_proposed;
            avg.delta_median += r.delta_median;
            avg.precision += r.precision;
            avg.recall += r.recall;
            avg.runtime_ms_proposed += r.runtime_ms_proposed;
            avg.runtime_ms_median += r.runtime_ms_median;
        }
        const double n = static_cast<double>(n_seeds);
        avg.delta_proposed /= n;
        avg.delta_median /= n;
        avg.precision /= n;
        avg.recall /= n;
        avg.runtime_ms_proposed /= n;
        avg.runtime_ms_median /= n;
        rows.push_back(avg);
    }
    return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << kBenchCsvHeader << '\n';
    char line[256];
    for (const BenchRow& r : rows) {
        std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f,%.6f,%.6f,%.3f,%.3f,%lld", r.p_percent,
                      r.delta_proposed, r.delta_median, r.precision, r.recall,
                      r.runtime_ms_proposed, r.runtime_ms_median, r.seed);
        out << line << '\n';
    }
}

} // namespace modfilter
