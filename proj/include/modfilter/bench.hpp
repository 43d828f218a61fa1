#ifndef MODFILTER_BENCH_HPP
#define MODFILTER_BENCH_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include "modfilter/image.hpp"
#include "modfilter/impulse_filter.hpp"
#include "modfilter/noise.hpp"

namespace modfilter {

/// One (noise percentage, seed) cell of the sweep. Average rows carry
/// seed = -1.
struct BenchRow {
    double p_percent = 0.0;
    double delta_proposed = 0.0;
    double delta_median = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double runtime_ms_proposed = 0.0;
    double runtime_ms_median = 0.0;
    long long seed = 0;
};

inline constexpr const char* kBenchCsvHeader =
    "p_percent,delta_proposed,delta_median,precision,recall,"
    "runtime_ms_proposed,runtime_ms_median,seed";

struct BenchOptions {
    std::vector<double> p_percent{10, 20, 30, 40, 50, 60, 70};
    std::vector<std::uint32_t> seeds{1, 2, 3};
    FilterConfig filter;
    NoiseMode noise_mode = NoiseMode::kRandomValue;
};

/// For each (p, seed), sorted by (p, seed): inject -> proposed filter and
/// median filter -> relative improvements, detector scores and runtimes.
/// Per-p arithmetic-mean rows (seed -1) are appended after the data rows.
std::vector<BenchRow> run_bench(const Image& base, const BenchOptions& options);

/// Fixed-schema CSV; identical inputs give identical bytes except in the
/// runtime columns.
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

} // namespace modfilter

#endif // MODFILTER_BENCH_HPP
